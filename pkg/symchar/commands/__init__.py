"""
Command handlers for the symchar CLI.
"""

from . import analysis, characters
