"""Tests for core functionality init."""
