from skeinlab.cli import main

main()
