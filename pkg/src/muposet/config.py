from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .errors import MuposetError


class ConfigError(MuposetError):
    pass


def atomic_write_text(path: Path, payload: str) -> None:
    """Replace `path` with `payload` so readers never see a partial file."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp_path: Path | None = None
    try:
        with tempfile.NamedTemporaryFile(
            "w",
            encoding="utf-8",
            dir=path.parent,
            prefix=f".{path.name}.",
            suffix=".tmp",
            delete=False,
        ) as tmp:
            tmp.write(payload)
            tmp.flush()
            os.fsync(tmp.fileno())
            tmp_path = Path(tmp.name)
        os.replace(tmp_path, path)
        tmp_path = None
    except OSError as e:
        raise ConfigError(f"Failed to write {path}: {e}") from e
    finally:
        if tmp_path is not None:
            try:
                tmp_path.unlink()
            except OSError:
                pass
