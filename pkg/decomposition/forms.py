from django import forms

from words.forms import CyclicWordField


class DecomposeForm(forms.Form):
    word = CyclicWordField(help_text="Chosen copy of W; U is its prefix")
    u_len = forms.IntegerField(min_value=1)
    shift = forms.IntegerField(min_value=1, required=False, help_text="Use a single copy of U (single overlap outcome)")

    def clean(self):
        cleaned_data = super().clean()
        word, u_len = cleaned_data.get('word'), cleaned_data.get('u_len')
        if word and u_len and u_len >= len(word):
            self.add_error('u_len', f"Must be smaller than the length of W ({len(word)})")
        return cleaned_data
