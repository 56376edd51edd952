"""Import settings_module to set DJANGO_SETTINGS_MODULE"""
