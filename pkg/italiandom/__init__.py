"""Exact Italian, Roman and plain domination on small graphs, with corona and twin checks"""
