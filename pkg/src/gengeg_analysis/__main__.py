from gengeg_analysis.main import main

main()
