from qk.cli import main

main()
