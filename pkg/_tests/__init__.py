"""Test suite for the omlkit package."""
