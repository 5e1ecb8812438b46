from baumsweet.main import main

main()
