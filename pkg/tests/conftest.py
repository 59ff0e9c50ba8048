"""Pytest rootdir anchor; also lets test modules import tests/brute.py."""
