"""
Tests for the special functions and the analytic bounds.
"""
