"""Module level init for tests."""
