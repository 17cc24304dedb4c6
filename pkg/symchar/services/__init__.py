"""
Services for the symchar character engine.
"""

from .cache import MemoCache, memo_cache
from .character_engine import CharacterEngine, character_engine
