"""Shipped JSON documents, loadable as ``data:<name>``."""
