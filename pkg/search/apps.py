from django.apps import AppConfig


class ConjectureSearchConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'search'
    verbose_name = 'Conjecture search'
