"""Grammaticality critic and break/fix data bootstrapping toolkit."""

__version__ = "0.1.0"
