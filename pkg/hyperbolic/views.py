from django.conf import settings
from django.http import JsonResponse
from django.views.decorators.http import require_GET

from axislab.reporting import versioned
from words.views import form_errors
from .forms import GeodesicForm, VerifyForm
from .geodesics import axis_geodesic_h2
from .matrices import NotHyperbolicError, evaluate, translation_length_h2
from .triangles import theorem1_scan


@require_GET
def geodesic(request):
    """Matrix, translation length and axis endpoints of an element"""
    form = GeodesicForm(request.GET)
    if not form.is_valid():
        return form_errors(form)

    m = evaluate(form.cleaned_data['rep'], form.cleaned_data['word'])
    try:
        payload = {
            'translation_length': translation_length_h2(m),
            'axis': axis_geodesic_h2(m).to_json(),
        }
    except NotHyperbolicError as e:
        return JsonResponse({'success': False, 'error': str(e), 'trace': e.trace}, status=400)

    return JsonResponse(versioned({'success': True, 'matrix': m.to_json(), 'trace': m.trace, **payload}))


@require_GET
def verify(request):
    """Edge bound check for the triangles of lifts, at small depth"""
    form = VerifyForm(request.GET)
    if not form.is_valid():
        return form_errors(form)

    try:
        scan = theorem1_scan(
            form.cleaned_data['rep'],
            form.cleaned_data['word'],
            form.cleaned_data['depth'],
            tol=settings.AXISLAB_H2_TOLERANCE,
            separation=settings.AXISLAB_TRIANGLE_SEPARATION,
            dedup_tol=settings.AXISLAB_DEDUP_TOLERANCE,
        )
    except NotHyperbolicError as e:
        return JsonResponse({'success': False, 'error': str(e), 'trace': e.trace}, status=400)

    return JsonResponse(versioned({'success': True, 'scan': scan.to_json()}))
