"""Tests for the documentation sources."""
