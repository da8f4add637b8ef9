"""Allow `python -m pyqsi`."""

from pyqsi.cli import main

if __name__ == "__main__":
    main()
