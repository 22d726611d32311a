from django.apps import AppConfig


class QuatalgConfig(AppConfig):
    name = 'quatalg'
