"""Module level init for utilities."""
