"""
Closed-form evaluators and special functions for the secrecy-rate analysis.
"""
