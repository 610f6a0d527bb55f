import logging

from django.http import JsonResponse
from django.views.decorators.http import require_GET

from axislab.reporting import versioned
from words.views import form_errors
from .forms import DecomposeForm
from .theorem import DecompositionError, overlap_decompose, tail_pair, theorem2_decompose

logger = logging.getLogger(__name__)


@require_GET
def decompose(request):
    """W = B C^k I from the prefix U of the chosen copy of W"""
    form = DecomposeForm(request.GET)
    if not form.is_valid():
        return form_errors(form)

    word, u_len, shift = form.cleaned_data['word'], form.cleaned_data['u_len'], form.cleaned_data['shift']
    try:
        if shift:
            return JsonResponse(versioned({'success': True, 'overlap': overlap_decompose(word, u_len, shift).to_json()}))
        decomposition = theorem2_decompose(word, u_len)
    except DecompositionError as e:
        logger.info(f"Decomposition of {word} with u_len={u_len} rejected: {e}")
        return JsonResponse({'success': False, 'error': str(e), 'outcome': e.outcome}, status=400)

    T, B = tail_pair(word, decomposition)
    return JsonResponse(versioned({
        'success': True,
        'decomposition': decomposition.to_json(),
        'tail_pair': {'T': T.letters, 'B': B.letters},
    }))
