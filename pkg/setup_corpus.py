#!/usr/bin/env python3
"""
MONOCLE Colouring Corpus
Writes the extremal colourings used by the examples and tests as .ecg/.ecb
files, each carrying its claimed bound in the comment header
"""

import sys
from pathlib import Path

sys.path.append('.')

from tools.constructions import CONSTRUCTIONS
from tools.errors import MonocleError
from tools.ecg_format import write_colouring

CORPUS_PATH = Path("./corpus")

# (subdirectory, kind, parameters)
SAMPLES = [
    ("two_colour", "bg", {"n": 13, "k": 2}),
    ("two_colour", "bg", {"n": 40, "k": 4}),
    ("two_colour", "bg", {"n": 100, "k": 5}),
    ("two_colour", "bg", {"n": 8, "k": 3}),
    ("affine", "affine", {"n": 16, "r": 3, "k": 1}),
    ("affine", "affine", {"n": 30, "r": 3, "k": 2}),
    ("affine", "affine", {"n": 40, "r": 4, "k": 2}),
    ("affine", "affine", {"n": 961, "r": 3, "k": 2}),
    ("zero", "hamzero", {"n": 8, "r": 2, "k": 3}),
    ("zero", "hamzero", {"n": 12, "r": 3, "k": 3}),
    ("bipartite", "bipmod", {"m": 6, "n": 9, "r": 3}),
    ("bipartite", "bipmod", {"m": 48, "n": 48, "r": 2}),
]

def sample_name(kind, parameters):
    suffix = "ecb" if kind == "bipmod" else "ecg"
    tag = "_".join(f"{key}{value}" for key, value in parameters.items())
    return f"{kind}_{tag}.{suffix}"

def create_corpus_directories():
    """Create one directory per family of colourings"""
    CORPUS_PATH.mkdir(exist_ok=True)
    subdirs = sorted({subdir for subdir, _, _ in SAMPLES})
    for subdir in subdirs:
        (CORPUS_PATH / subdir).mkdir(exist_ok=True)

    print("📁 Created corpus directory structure:")
    for subdir in subdirs:
        print(f"   - corpus/{subdir}/")

def add_sample_colourings(force=False):
    """Generate every sample colouring that is not on disk yet"""
    for subdir, kind, parameters in SAMPLES:
        file_path = CORPUS_PATH / subdir / sample_name(kind, parameters)
        if file_path.exists() and not force:
            print(f"📄 Already exists: {file_path}")
            continue
        try:
            report = CONSTRUCTIONS[kind](**parameters)
        except MonocleError as e:
            print(f"❌ Skipped {file_path}: {e}")
            continue
        write_colouring(file_path, report.colouring, report.metadata())
        print(f"✅ Created: {file_path} (claimed bound {report.claimed_bound})")

def create_readme():
    """Create a README for the corpus directory"""
    readme_content = """# MONOCLE Colouring Corpus

Extremal edge-colourings written by `python setup_corpus.py`.

## Directory Structure

- **two_colour/**: two-colourings of K_n whose largest monochromatic k-connected subgraph has order n-2k+2
- **affine/**: r-colourings built from the affine plane of order r-1
- **zero/**: colourings of K_n, n <= 2r(k-1), with no monochromatic k-connected subgraph at all
- **bipartite/**: modular colourings of K_{m,n}

## File Format

```
# construction: bg
# parameters: n=13 k=2
# claimedBound: 11
ECG 1
13 2
0 1 1
...
```

Vertices are 0-indexed, colours 1-indexed. `.ecb` files carry `ECB 1` and a
`m n r` size line; their edges are `u v c` with u on the left side.

## Checking a Claimed Bound

```bash
python main.py oracle --file corpus/two_colour/bg_n13_k2.ecg --k 2
```

The oracle is exhaustive and refuses colourings above its vertex limit
(MONOCLE_ORACLE_MAX_N); the larger files are for the extractors.
"""

    with open(CORPUS_PATH / "README.md", 'w') as f:
        f.write(readme_content)
    print("✅ Created corpus/README.md")

def main():
    """Main function to set up corpus"""
    print("🎯 MONOCLE Colouring Corpus")
    print("=" * 50)

    # Create directory structure
    create_corpus_directories()
    print()

    # Generate sample colourings
    print("📝 Writing sample colourings...")
    add_sample_colourings(force="--force" in sys.argv)
    print()

    # Create README
    create_readme()
    print()

    print("🎉 Corpus setup complete!")
    print("\n📋 Next Steps:")
    print("1. Check a claimed bound: python main.py oracle --file corpus/two_colour/bg_n13_k2.ecg --k 2")
    print("2. Run an extractor: python main.py extract thm21k --file corpus/two_colour/bg_n40_k4.ecg --k 4")
    print("3. Compare with the table: python main.py bounds --n 40 --r 2 --k 4")

if __name__ == "__main__":
    main()
