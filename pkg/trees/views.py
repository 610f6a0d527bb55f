from django.http import JsonResponse
from django.views.decorators.http import require_GET

from axislab.reporting import versioned
from words.views import form_errors
from .axes import axis_intersection, translation_length
from .forms import AxisForm, IntersectForm


@require_GET
def axis_detail(request):
    """Axis and translation length of an element"""
    form = AxisForm(request.GET)
    if not form.is_valid():
        return form_errors(form)

    axis = form.cleaned_data['axis']
    return JsonResponse(versioned({
        'success': True,
        'axis': axis.to_json(),
        'translation_length': translation_length(form.cleaned_data['element']),
    }))


@require_GET
def intersect(request):
    """Exact intersection of the axes of two elements"""
    form = IntersectForm(request.GET)
    if not form.is_valid():
        return form_errors(form)

    result = axis_intersection(form.cleaned_data['first_axis'], form.cleaned_data['second_axis'])
    return JsonResponse(versioned({'success': True, 'intersection': result.to_json()}))
