from django import forms

from words.forms import WordField
from .axes import NoAxisError, axis_of


class AxisForm(forms.Form):
    element = WordField(required=True, help_text="Nontrivial element, e.g. xyX")

    def clean_element(self):
        element = self.cleaned_data['element']
        try:
            self.cleaned_data['axis'] = axis_of(element)
        except NoAxisError as e:
            raise forms.ValidationError(str(e))
        return element


class IntersectForm(forms.Form):
    first = WordField(required=True)
    second = WordField(required=True)

    def clean(self):
        cleaned_data = super().clean()
        for name in ('first', 'second'):
            if name not in cleaned_data:
                continue
            try:
                cleaned_data[f'{name}_axis'] = axis_of(cleaned_data[name])
            except NoAxisError as e:
                self.add_error(name, str(e))
        return cleaned_data
