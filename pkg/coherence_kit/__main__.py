from coherence_kit.cli.app import main

raise SystemExit(main())
