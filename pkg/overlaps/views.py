from django.http import JsonResponse
from django.views.decorators.http import require_GET

from axislab.reporting import versioned
from words.views import form_errors
from .forms import TripodForm
from .tripods import EXAMPLES, TripodError, tripod_config


@require_GET
def tripod(request):
    form = TripodForm(request.GET)
    if not form.is_valid():
        return form_errors(form)

    data = form.cleaned_data
    try:
        report = tripod_config(data['word'], data['g1'], data['g2'])
    except TripodError as e:
        return JsonResponse({'success': False, 'error': str(e), 'which': e.which}, status=400)
    return JsonResponse(versioned({'success': True, 'report': report.to_json()}))


@require_GET
def examples(request):
    """The four worked overlap examples, computed from scratch"""
    reports = [{'name': example.name, **example.report().to_json()} for example in EXAMPLES]
    return JsonResponse(versioned({'success': True, 'examples': reports}))
