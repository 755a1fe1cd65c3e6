import logging
import os
import os.path as osp
import shutil

from .errors import SchemaError

logger = logging.getLogger(__name__)

# extensions of the text formats read by affinelogic
SIGNATURE_EXT = '.alsig'
FORMULAS_EXT = '.alf'
THEORY_EXT = '.alth'
STRUCTURE_EXT = '.alstr'
PROOF_EXT = '.alpf'
WEIGHTS_EXT = '.alw'


def read_text(fullname, ext: str or None = None) -> str:
    """Reads a UTF-8 document, optionally insisting on its extension.

    Raises:
        SchemaError: if ``ext`` is given and ``fullname`` does not end with it.
        OSError: if the file cannot be read.
    """
    if ext is not None and not fullname.endswith(ext):
        raise SchemaError(f"expected a {ext} file, got {fullname}.")
    with open(fullname, 'r', encoding='utf-8') as f:
        return f.read()


def write_text(fullname, text: str):
    """Writes ``text`` to ``fullname``.

    The text goes to ``fullname + '_tmp'`` first and is moved in place once complete, so an
    interrupted write never leaves a truncated document behind.
    """
    path = osp.split(fullname)[0]
    if path and not osp.exists(path):
        os.makedirs(path)
    tmp_fullname = fullname + "_tmp"
    with open(tmp_fullname, 'w', encoding='utf-8') as f:
        f.write(text)
    shutil.move(tmp_fullname, fullname)
    logger.debug("wrote %s", fullname)
    return fullname


def list_files(path, ext: str) -> list:
    """Sorted list of the ``ext`` files directly inside ``path``."""
    if not osp.isdir(path):
        raise SchemaError(f"{path} is not a directory.")
    return sorted(osp.join(path, fp) for fp in os.listdir(path) if fp.endswith(ext))
