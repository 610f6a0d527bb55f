from django import forms

from words.forms import CyclicWordField, WordField


class TripodForm(forms.Form):
    word = CyclicWordField(help_text="Cyclically reduced word W")
    g1 = WordField(required=True, help_text="Conjugator of the first translate")
    g2 = WordField(required=True, help_text="Conjugator of the second translate")
