import logging

from django.http import JsonResponse
from django.views.decorators.http import require_GET

from axislab.reporting import versioned
from .forms import ReduceForm
from .words import cyclic_reduce, free_reduce

logger = logging.getLogger(__name__)


def form_errors(form):
    """Standard 400 answer for an invalid API form"""
    return JsonResponse({'success': False, 'error': form.errors.get_json_data()}, status=400)


@require_GET
def reduce_word(request):
    """Free and cyclic reduction of a word"""
    form = ReduceForm(request.GET)
    if not form.is_valid():
        return form_errors(form)

    reduced = free_reduce(form.cleaned_data['word'])
    decomposition = cyclic_reduce(reduced)
    logger.debug(f"Reduced {form.cleaned_data['word']} to {reduced}")
    return JsonResponse(versioned({
        'success': True,
        'reduced': reduced.to_json(),
        'cyclic': decomposition.to_json(),
    }))
