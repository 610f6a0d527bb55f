from django import forms

from words.forms import CyclicWordField, WordField
from .matrices import GeometryError, PuncturedTorusRep


class RepresentationForm(forms.Form):
    gen_x = forms.CharField(required=False, help_text="Image of x as 'a,b,c,d'")
    gen_y = forms.CharField(required=False, help_text="Image of y as 'a,b,c,d'")

    def clean(self):
        cleaned_data = super().clean()
        try:
            cleaned_data['rep'] = PuncturedTorusRep.from_settings(cleaned_data.get('gen_x'), cleaned_data.get('gen_y'))
        except GeometryError as e:
            raise forms.ValidationError(str(e))
        return cleaned_data


class GeodesicForm(RepresentationForm):
    word = WordField(required=True, help_text="Element whose axis is wanted")


class VerifyForm(RepresentationForm):
    word = CyclicWordField()
    depth = forms.IntegerField(min_value=0, max_value=3, initial=2, required=False)

    def clean_depth(self):
        depth = self.cleaned_data.get('depth')
        return 2 if depth is None else depth
