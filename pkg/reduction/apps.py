from django.apps import AppConfig


class ReductionConfig(AppConfig):
    name = 'reduction'
    verbose_name = 'GT to k-Center reduction'
