"""
Johnson Sep Tests
=================
"""
