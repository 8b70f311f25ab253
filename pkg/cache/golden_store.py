#!/usr/bin/env python3
"""Golden files for reduced bases, one text file per ideal label."""
from __future__ import annotations

import logging
import os
import re
import tempfile
from typing import Optional

from configs.config import Config

logger = logging.getLogger(__name__)

_UNSAFE = re.compile(r"[^A-Za-z0-9_.+=-]")


class GoldenEntry:
	def __init__(self, key: str, path: str) -> None:
		self.key = key
		self.path = path


class GoldenStore:
	def __init__(self, root_dir: str = None) -> None:
		self.root_dir = root_dir or Config.GOLDEN_ROOT
		os.makedirs(self.root_dir, exist_ok=True)

	def key_to_path(self, key: str) -> GoldenEntry:
		name = _UNSAFE.sub("_", key.replace("/", "_"))
		return GoldenEntry(key, os.path.join(self.root_dir, name + ".gb"))

	def get(self, key: str) -> Optional[str]:
		entry = self.key_to_path(key)
		if not os.path.exists(entry.path):
			return None
		with open(entry.path, "r", encoding="utf-8") as f:
			return f.read()

	def put(self, key: str, text: str) -> str:
		"""Write atomically via a temp file and rename; returns the path."""
		entry = self.key_to_path(key)
		os.makedirs(self.root_dir, exist_ok=True)
		tmp_fd, tmp_path = tempfile.mkstemp(dir=self.root_dir, prefix=".tmp_", suffix=".gb")
		try:
			with os.fdopen(tmp_fd, "w", encoding="utf-8") as f:
				f.write(text)
				f.flush()
				os.fsync(f.fileno())
			os.replace(tmp_path, entry.path)
		except Exception:
			if os.path.exists(tmp_path):
				os.remove(tmp_path)
			raise
		return entry.path

	def compare_or_store(self, key: str, text: str) -> bool:
		"""True when no golden exists yet (it is written) or when it matches ``text``."""
		existing = self.get(key)
		if existing is None:
			path = self.put(key, text)
			logger.info("stored new golden basis %s", path)
			return True
		if existing != text:
			logger.warning("golden mismatch for %s", key)
			return False
		return True

	def invalidate(self, key: str) -> None:
		entry = self.key_to_path(key)
		if os.path.exists(entry.path):
			os.remove(entry.path)
