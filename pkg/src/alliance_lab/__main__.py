from alliance_lab.cli import main

main()
