"""
Tests package for the IRS secrecy simulator.
"""
