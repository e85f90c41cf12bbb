"""
Tests for the simulator packages.
"""
