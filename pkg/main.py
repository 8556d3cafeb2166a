import sys

from deltashell.command_line import main
from deltashell.version import VERSION_STRING

if __name__ == "__main__":
    if "--json" not in sys.argv:
        print("=" * 54)
        print(f"| deltashell version: {VERSION_STRING:<31} |")
        print("=" * 54)
    sys.exit(main())
