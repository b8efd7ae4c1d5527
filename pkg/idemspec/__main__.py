from idemspec.cmdline import main

if __name__ == "__main__":  # pragma: nocover
    main()
