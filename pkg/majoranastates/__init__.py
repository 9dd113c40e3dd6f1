# -*- coding: utf-8 -*-
"""
A package for the Majorana representation of symmetric multiqubit states.
"""

__version_info__ = (0,1,0)
__version__ = '.'.join([str(__value) for __value in __version_info__])
__copyright__ = '2024, majoranastates contributors'
__license__ = 'MIT'

from .majoranastates import *
