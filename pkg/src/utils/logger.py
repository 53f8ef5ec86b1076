import json
import os
import uuid
from datetime import datetime
from enum import Enum

# Chemin par défaut du fichier de logs (surchargé par LASHLAB_LOG_FILE)
DEFAULT_LOG_FILE = os.path.join("logs", "experiment_data.json")


class ActionType(str, Enum):
    """
    Énumération des types d'actions possibles pour standardiser l'analyse.
    """
    COMPUTATION = "COMPUTATION"  # Calcul d'un invariant (ligne, chirurgie, tresse)
    CHECK = "CHECK"              # Exécution d'une fixture
    EXPORT = "EXPORT"            # Écriture d'un artefact
    DEBUG = "DEBUG"              # Erreurs et interruptions


def log_file_path() -> str:
    return os.getenv("LASHLAB_LOG_FILE", DEFAULT_LOG_FILE)


def logging_enabled() -> bool:
    return os.getenv("LASHLAB_LOGGING", "1").strip() not in ("0", "false", "no")


def log_experiment(component: str, action: ActionType, details: dict, status: str):
    """
    Enregistre un calcul ou une vérification dans le journal JSON.

    Args:
        component (str): Module à l'origine de l'entrée (ex: "surgdesc", "FixtureJudge").
        action (ActionType): Le type d'action effectué (utiliser l'Enum ActionType).
        details (dict): Dictionnaire contenant les détails. DOIT contenir 'input' et 'output'.
        status (str): "SUCCESS", "FAILURE", "INFO" ou "INTERRUPTED".

    Raises:
        ValueError: Si les champs obligatoires sont manquants dans 'details' ou si l'action est invalide.
    """

    # --- 1. VALIDATION DU TYPE D'ACTION ---
    valid_actions = [a.value for a in ActionType]
    if isinstance(action, ActionType):
        action_str = action.value
    elif action in valid_actions:
        action_str = action
    else:
        raise ValueError(f"❌ Action invalide : '{action}'. Utilisez la classe ActionType (ex: ActionType.CHECK).")

    # --- 2. VALIDATION STRICTE DES DONNÉES ---
    required_keys = ["input", "output"]
    missing_keys = [key for key in required_keys if key not in details]
    if missing_keys:
        raise ValueError(
            f"❌ Erreur de Logging (Composant: {component}) : "
            f"Les champs {missing_keys} sont manquants dans le dictionnaire 'details'."
        )

    if not logging_enabled():
        return

    # --- 3. PRÉPARATION DE L'ENTRÉE ---
    log_file = log_file_path()
    log_dir = os.path.dirname(log_file)
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)

    entry = {
        "id": str(uuid.uuid4()),
        "timestamp": datetime.now().isoformat(),
        "component": component,
        "action": action_str,
        "details": details,
        "status": status
    }

    # --- 4. LECTURE & ÉCRITURE ROBUSTE ---
    data = []
    if os.path.exists(log_file):
        try:
            with open(log_file, 'r', encoding='utf-8') as f:
                content = f.read().strip()
                if content:
                    data = json.loads(content)
        except json.JSONDecodeError:
            print(f"⚠️ Attention : Le fichier de logs {log_file} était corrompu. Une nouvelle liste a été créée.")
            data = []
        if not isinstance(data, list):
            print(f"⚠️ Attention : Le fichier de logs {log_file} n'était pas une liste. Une nouvelle liste a été créée.")
            data = []

    data.append(entry)

    with open(log_file, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=4, ensure_ascii=False, default=str)
