# Perfect cone intersection calculator - App Module

__version__ = "1.0.0"
