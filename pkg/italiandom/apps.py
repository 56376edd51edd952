"""Boilerplate"""

from django.apps import AppConfig


class ItaliandomConfig(AppConfig):
    """Basic configuration; the app has no models"""

    name = 'italiandom'
