from django.apps import AppConfig


class ArithConfig(AppConfig):
    name = 'arith'
