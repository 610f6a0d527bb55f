from django.apps import AppConfig


class OverlapsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'overlaps'
    verbose_name = 'Overlap analysis'
