from django.contrib import admin

from .models import SearchRun


@admin.register(SearchRun)
class SearchRunAdmin(admin.ModelAdmin):
    list_display = ['max_len', 'symmetry', 'configs_found', 'counterexamples', 'theorem2_failures', 'created_at']
    list_filter = ['symmetry', 'max_len']
    readonly_fields = ['created_at']
