"""Generated by tools/generate_version.py from version.json. Do not edit."""

VERSION_NUMBER = (0, 1, 0)
VERSION_INT = 1
VERSION_STAGE = "DEV"
VERSION_STRING = f"{'.'.join(str(n) for n in VERSION_NUMBER)}-{VERSION_STAGE}"

if __debug__:
    VERSION_STRING += "-source"
