#!/usr/bin/env python3
"""
MONOCLE Setup Script
Checks the environment, writes a sample .env, and smoke-tests the toolkit
"""

import os
import sys
import logging
from dotenv import load_dotenv

# Add current directory to path
sys.path.append('.')

def setup_logging():
    """Setup logging configuration"""
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s'
    )

def check_environment():
    """Check environment overrides and the loaded settings"""
    load_dotenv()

    print("🔍 Checking Environment Configuration...")

    from tools.settings import load_settings
    settings = load_settings()

    for name in ("MONOCLE_ORACLE_MAX_N", "MONOCLE_MAX_COMPONENT", "MONOCLE_LOG_LEVEL"):
        value = os.getenv(name)
        print(f"⚙️ {name}: {value if value else 'not set (using config/settings.yaml)'}")

    print(f"🔢 Oracle vertex limit: {settings.oracle.max_n}")
    print(f"🧩 Colour-restricted component limit: {settings.oracle.max_component}")
    print(f"📏 thm21k threshold: {settings.extractors.thm21k_threshold}")

def check_catalogue():
    """Make sure the bound labels load"""
    print("\n📚 Loading Bound Catalogue...")

    from tools.bounds import load_theorem_catalogue
    catalogue = load_theorem_catalogue()
    if catalogue:
        print(f"✅ Catalogue loaded - {len(catalogue.get('lower', {}))} lower, "
              f"{len(catalogue.get('upper', {}))} upper bound labels")
    else:
        print("❌ config/theorems.yaml could not be loaded - bounds will show raw keys")

def test_tools():
    """Smoke-test constructions, extractors and the oracle on small inputs"""
    print("\n🛠️ Testing MONOCLE Tools...")

    try:
        from tools.constructions import construct_bg, construct_affine
        from tools.extract_two import extract_thm21k
        from tools.oracle import exact_M
        from tools.bounds import theorem_bounds

        bg = construct_bg(13, 2)
        value, _ = exact_M(bg.colouring, 2)
        status = "✅" if value == bg.claimed_bound else "❌"
        print(f"{status} bg(13, 2): claimed {bg.claimed_bound}, oracle {value}")

        affine = construct_affine(16, 3, 1)
        value, _ = exact_M(affine.colouring, 1)
        status = "✅" if value == affine.claimed_bound else "❌"
        print(f"{status} affine(16, 3, 1): claimed {affine.claimed_bound}, oracle {value}")

        report = extract_thm21k(construct_bg(40, 4).colouring, 4)
        print(f"✅ thm21k on bg(40, 4): witness of order {report.witness.order} (guarantee {report.guarantee})")

        print(f"✅ Bounds (100, 2, 5): {theorem_bounds(100, 2, 5).summary()}")

    except Exception as e:
        print(f"❌ Tool testing failed: {e}")

def create_sample_env():
    """Create sample .env file if it doesn't exist"""
    env_path = ".env"
    if not os.path.exists(env_path):
        print("\n📝 Creating sample .env file...")
        with open(env_path, 'w') as f:
            f.write("""# MONOCLE Environment Variables

# Exhaustive oracle: refuse colourings with more vertices than this
MONOCLE_ORACLE_MAX_N=16

# Colour-restricted oracle: refuse k-core components larger than this
MONOCLE_MAX_COMPONENT=24

# Logging level (DEBUG, INFO, WARNING, ERROR)
MONOCLE_LOG_LEVEL=WARNING
""")
        print("✅ Created .env file - adjust the limits if needed")
    else:
        print("✅ .env file already exists")

def main():
    """Main setup function"""
    setup_logging()

    print("🎯 MONOCLE (MONOchromatic Connectivity Lab & Extractors) Setup")
    print("=" * 60)

    # Create sample .env
    create_sample_env()

    # Check environment
    check_environment()

    # Bound labels
    check_catalogue()

    # Test tools
    test_tools()

    print("\n" + "=" * 60)
    print("🎉 MONOCLE Setup Complete!")
    print("\n🚀 Next Steps:")
    print("1. Run: python setup_corpus.py to write the sample colourings")
    print("2. Run: python main.py bounds --n 100 --r 2 --k 5")
    print("3. Run: python main.py extract thm21k --file corpus/two_colour/bg_n40_k4.ecg --k 4")
    print("4. Run: pytest -m 'not slow'")

if __name__ == "__main__":
    main()
