"""
Settings package for the IRS secrecy simulator.
"""
