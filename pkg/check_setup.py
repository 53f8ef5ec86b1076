# check_setup.py
import importlib
import os
import sys

REQUIRED_MODULES = ["sympy", "pandas", "colorama", "dotenv", "pytest", "hypothesis"]


def check_environment():
    print("🔍 Démarrage du 'Sanity Check'...\n")
    all_good = True

    # 1. Vérification Python
    version = sys.version_info
    if (version.major == 3) and (version.minor >= 10):
        print(f"✅ Python Version: {version.major}.{version.minor}")
    else:
        print(f"❌ Python Version: {version.major}.{version.minor} (Requis: 3.10 ou plus)")
        all_good = False

    # 2. Vérification des dépendances
    for name in REQUIRED_MODULES:
        try:
            importlib.import_module(name)
            print(f"✅ Module {name} importable.")
        except ImportError:
            print(f"❌ Module {name} introuvable (pip install -r requirements.txt).")
            all_good = False

    # 3. Vérification de la configuration (.env facultatif)
    if os.path.exists(".env"):
        print("✅ Fichier .env détecté.")
    else:
        print("ℹ️  Pas de fichier .env : valeurs par défaut (voir .env.example).")

    # 4. Vérification Logs
    log_dir = os.path.dirname(os.getenv("LASHLAB_LOG_FILE", os.path.join("logs", "experiment_data.json")))
    if log_dir and not os.path.exists(log_dir):
        os.makedirs(log_dir)
        print(f"✅ Dossier {log_dir}/ créé.")

    if all_good:
        print("\n🚀 TOUT EST PRÊT ! Lancez : python main.py check")
    else:
        print("\n⚠️ CORRIGEZ LES ERREURS AVANT DE CONTINUER.")
    return all_good


if __name__ == "__main__":
    sys.exit(0 if check_environment() else 1)
