"""
Sweeps, figure presets, validation suite and file writers.
"""
