from django.apps import AppConfig


class QuadfieldConfig(AppConfig):
    name = 'quadfield'
