from django.apps import AppConfig


class KCenterConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'kcenter'
    verbose_name = 'k-Center solvers'
