from django.apps import AppConfig


class LocalsymConfig(AppConfig):
    name = 'localsym'
