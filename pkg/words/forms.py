from django import forms

from .words import CyclicWord, WordError, parse_word


class WordField(forms.CharField):
    """Parses text in the 'xyXY' alphabet into a Word"""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault('strip', True)
        kwargs.setdefault('required', False)
        kwargs.setdefault('empty_value', '')
        super().__init__(*args, **kwargs)

    def to_python(self, value):
        text = super().to_python(value)
        try:
            return parse_word(text)
        except WordError as e:
            raise forms.ValidationError(str(e), code='invalid_word')

    def validate(self, value):
        # the empty word counts as a missing value
        super().validate(str(value) if value is not None else value)


class CyclicWordField(WordField):
    """A nonempty cyclically reduced word"""

    def __init__(self, *args, **kwargs):
        kwargs['required'] = True
        super().__init__(*args, **kwargs)

    def to_python(self, value):
        word = super().to_python(value)
        if not word:
            return word
        try:
            return CyclicWord(word)
        except WordError as e:
            raise forms.ValidationError(str(e), code='not_cyclically_reduced')


class ReduceForm(forms.Form):
    word = WordField(help_text="Word in the alphabet x, y, X, Y (X = x^-1, Y = y^-1)")
