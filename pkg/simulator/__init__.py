"""
Monte Carlo link simulator for IRS-assisted two-way secure communications.
"""
