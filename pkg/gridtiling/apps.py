from django.apps import AppConfig


class GridTilingConfig(AppConfig):
    name = 'gridtiling'
    verbose_name = 'Grid Tiling with Inequality'
