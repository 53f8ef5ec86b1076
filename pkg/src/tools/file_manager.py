"""
file_manager.py - Lecture et écriture des artefacts (diagrammes, tables)
Toute erreur d'E/S est remontée avec le chemin concerné.
"""
from pathlib import Path


def read_file_safe(file_path: str, encoding: str = 'utf-8') -> str:
    """
    Lit un fichier texte.

    Args:
        file_path: Chemin du fichier à lire
        encoding: Encodage du fichier (défaut: utf-8)

    Returns:
        Contenu du fichier

    Raises:
        FileNotFoundError: Si le fichier n'existe pas
        IOError: Si la lecture échoue
    """
    path = Path(file_path)

    if not path.exists():
        raise FileNotFoundError(f"Le fichier {file_path} n'existe pas")

    if not path.is_file():
        raise IOError(f"{file_path} n'est pas un fichier")

    try:
        with open(path, 'r', encoding=encoding) as f:
            return f.read()
    except OSError as e:
        raise IOError(f"Erreur lors de la lecture de {file_path}: {e}")


def write_file_safe(file_path: str, content: str, encoding: str = 'utf-8') -> str:
    """
    Écrit un fichier texte, en créant les dossiers parents si nécessaire.

    Le contenu est écrit tel quel (newline='\\n') pour que deux exports
    identiques donnent des fichiers identiques octet par octet.

    Returns:
        Le chemin absolu écrit
    """
    path = Path(file_path)

    try:
        path = path.resolve()
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding=encoding, newline='\n') as f:
            f.write(content)
    except OSError as e:
        raise IOError(f"Erreur lors de l'écriture dans {file_path}: {e}")
    return str(path)
