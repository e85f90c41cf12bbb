"""
Tests for sweeps, presets, writers, validation and the CLI.
"""
