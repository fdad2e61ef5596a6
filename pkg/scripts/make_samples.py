"""Regenerate the shipped sample files under src/twofaced/samples."""

import sys

from twofaced.samples import write_samples

if __name__ == "__main__":
    for path in write_samples(sys.argv[1] if len(sys.argv) > 1 else None):
        print(path)
