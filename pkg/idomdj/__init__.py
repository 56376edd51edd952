"""Settings-only Django project hosting the idom management command"""
