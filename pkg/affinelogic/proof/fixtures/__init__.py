import os.path as osp

FIXTURES_DIR = osp.dirname(osp.abspath(__file__))
MUTANTS_DIR = osp.join(FIXTURES_DIR, 'mutants')


def fixture_path(name: str, mutant: bool = False) -> str:
    """Path of a shipped proof script, e.g. ``fixture_path('a15.alpf')``."""
    return osp.join(MUTANTS_DIR if mutant else FIXTURES_DIR, name)
