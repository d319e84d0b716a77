"""Accelerator package: compiled core plus its pure-numpy twin."""
