"""
braidkit.py - Algèbre des mots de tresses (B_3 et B_n)
Tresses paramétrées de la forme (*), opérations sur les mots, décomposition
2-bridge constructive et genre des clôtures de tresses positives.

Égalité des mots = égalité libre (aucune relation de tresse n'est utilisée).
"""
from dataclasses import dataclass
from itertools import groupby
from typing import Dict, List, Sequence, Tuple


@dataclass(frozen=True)
class BraidWord:
    """Mot en les σ_i : la lettre v signifie σ_{|v|}^{signe(v)}."""
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(v) for v in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.strands < 2:
            raise ValueError(f"❌ Une tresse a au moins 2 brins, reçu {self.strands}")
        for v in letters:
            if v == 0 or abs(v) > self.strands - 1:
                raise ValueError(f"❌ Lettre {v} invalide sur {self.strands} brins")

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.letters)


@dataclass(frozen=True)
class TwoBridgeCertificate:
    """Preuve vérifiable de la décomposition ξ = σ_1^{-1} α ω (égalité libre)."""
    identity_holds: bool
    alpha_coeffs: Tuple[int, ...]
    omega_coeffs: Tuple[int, ...]

    @property
    def alpha_ok(self) -> bool:
        return len(self.alpha_coeffs) >= 3 and all(c > 0 for c in self.alpha_coeffs)

    @property
    def omega_ok(self) -> bool:
        return len(self.omega_coeffs) >= 3 and all(c > 0 for c in self.omega_coeffs)

    @property
    def valid(self) -> bool:
        return self.identity_holds and self.alpha_ok and self.omega_ok


def _bar(i: int) -> int:
    return 1 if i % 2 == 1 else 2


def _power(generator: int, exponent: int) -> List[int]:
    sign = 1 if exponent > 0 else -1
    return [sign * generator] * abs(exponent)


def _check_coeffs(coeffs: Sequence[int], name: str) -> Tuple[int, ...]:
    coeffs = tuple(int(c) for c in coeffs)
    if not coeffs:
        raise ValueError(f"❌ {name} : la suite de coefficients est vide")
    if any(c < 0 for c in coeffs):
        raise ValueError(f"❌ {name} : coefficients négatifs interdits {coeffs}")
    return coeffs


def alpha_form(a: Sequence[int]) -> BraidWord:
    """
    Tresse α = σ_{n̄}^{ε_n a_n} ... σ_2^{a_2} σ_1^{-a_1} avec ε_i = (-1)^i.

    Args:
        a: (a_1, ..., a_n), entiers >= 0

    Returns:
        Le mot sur 3 brins (les exposants nuls ne produisent aucune lettre)
    """
    a = _check_coeffs(a, "alpha_form")
    letters = []
    for i in range(len(a), 0, -1):
        letters += _power(_bar(i), (-1) ** i * a[i - 1])
    return BraidWord(3, tuple(letters))


def omega_form(z: Sequence[int]) -> BraidWord:
    """Tresse ω = σ_1^{z_1} σ_2^{-z_2} σ_1^{z_3} ..."""
    z = _check_coeffs(z, "omega_form")
    letters = []
    for i in range(1, len(z) + 1):
        letters += _power(_bar(i), -((-1) ** i) * z[i - 1])
    return BraidWord(3, tuple(letters))


def _runs(w: BraidWord) -> List[Tuple[int, int]]:
    """Blocs maximaux (générateur, exposant) ; un bloc de signes mélangés est refusé."""
    runs = []
    for generator, group in groupby(w.letters, key=abs):
        group = list(group)
        if len(set(group)) > 1:
            raise ValueError(f"❌ Bloc de σ_{generator} de signes mélangés dans {w}")
        runs.append((generator, sum(1 if v > 0 else -1 for v in group)))
    return runs


def parse_alpha(w: BraidWord) -> Tuple[int, ...]:
    """
    Relit un mot de la forme α : renvoie (a_1, ..., a_n).

    a_1 vaut 0 si le mot se termine par une puissance de σ_2.

    Raises:
        ValueError: si le mot n'est pas de la forme α
    """
    if w.strands != 3:
        raise ValueError(f"❌ parse_alpha : tresse sur 3 brins attendue, reçu {w.strands}")
    runs = _runs(w)
    coeffs = []
    if runs and runs[-1][0] == 2:
        coeffs.append(0)
    for generator, exponent in reversed(runs):
        if (generator == 1) != (exponent < 0):
            raise ValueError(f"❌ {w} n'est pas de la forme α (σ_1 négatif, σ_2 positif)")
        coeffs.append(abs(exponent))
    return tuple(coeffs)


def parse_omega(w: BraidWord) -> Tuple[int, ...]:
    """Relit un mot de la forme ω : renvoie (z_1, ..., z_r), z_1 = 0 s'il commence par σ_2."""
    if w.strands != 3:
        raise ValueError(f"❌ parse_omega : tresse sur 3 brins attendue, reçu {w.strands}")
    runs = _runs(w)
    coeffs = []
    if runs and runs[0][0] == 2:
        coeffs.append(0)
    for generator, exponent in runs:
        if (generator == 1) != (exponent > 0):
            raise ValueError(f"❌ {w} n'est pas de la forme ω (σ_1 positif, σ_2 négatif)")
        coeffs.append(abs(exponent))
    return tuple(coeffs)


def free_reduce(w: BraidWord) -> BraidWord:
    """Supprime les paires adjacentes (v, -v) jusqu'à stabilisation (pile, une passe)."""
    stack: List[int] = []
    for v in w.letters:
        if stack and stack[-1] == -v:
            stack.pop()
        else:
            stack.append(v)
    return BraidWord(w.strands, tuple(stack))


def concat(*words: BraidWord) -> BraidWord:
    """Produit des mots (sans réduction)."""
    if not words:
        raise ValueError("❌ concat : au moins un mot est requis")
    strands = {w.strands for w in words}
    if len(strands) != 1:
        raise ValueError(f"❌ concat : nombres de brins incompatibles {sorted(strands)}")
    return BraidWord(strands.pop(), tuple(v for w in words for v in w.letters))


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-v for v in reversed(w.letters)))


def mirror(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-v for v in w.letters))


def reverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(reversed(w.letters)))


def generator_swap(w: BraidWord) -> BraidWord:
    """Échange σ_1 et σ_2 (tresses à 3 brins uniquement)."""
    if w.strands != 3:
        raise ValueError(f"❌ generator_swap exige 3 brins, reçu {w.strands}")
    return BraidWord(3, tuple((3 - abs(v)) * (1 if v > 0 else -1) for v in w.letters))


def is_positive(w: BraidWord) -> bool:
    return all(v > 0 for v in w.letters)


def from_string(text: str, strands: int) -> BraidWord:
    """Lit des entiers signés non nuls séparés par des blancs."""
    try:
        letters = tuple(int(tok) for tok in text.split())
    except ValueError:
        raise ValueError(f"❌ Mot de tresse illisible : '{text}'")
    return BraidWord(strands, letters)


def plat_word(alpha: BraidWord, omega: BraidWord) -> BraidWord:
    """La 3-tresse σ_1^{-1} α ω dont la clôture plate est le noeud J^{α,ω,m}."""
    return concat(BraidWord(3, (-1,)), alpha, omega)


def _check_alternating(xi: BraidWord) -> None:
    if xi.strands != 3:
        raise ValueError(f"❌ ξ doit être une 3-tresse, reçu {xi.strands} brins")
    if not xi.letters:
        return
    if abs(xi.letters[0]) != 1:
        raise ValueError(f"❌ ξ doit commencer par une puissance de σ_1 : {xi}")
    sign_1 = 1 if xi.letters[0] > 0 else -1
    for v in xi.letters:
        expected = sign_1 if abs(v) == 1 else -sign_1
        if (1 if v > 0 else -1) != expected:
            raise ValueError(f"❌ ξ n'est pas une tresse alternée en forme normale : {xi}")


def decompose_two_bridge(
    xi: BraidWord, a_prime: Sequence[int] = (1, 1, 1)
) -> Tuple[BraidWord, BraidWord, TwoBridgeCertificate]:
    """
    Écrit la clôture plate de ξ comme celle de σ_1^{-1} α ω.

    Trois cas : ξ = σ_1^{-1}ξ' donne (ξ'α', α'^{-1}) ; ξ commençant par une
    puissance positive de σ_1 donne (α', α'^{-1}σ_1ξ) ; ξ trivial donne
    (α', α'^{-1}σ_1).

    Args:
        xi: 3-tresse alternée commençant par une puissance de σ_1, ou vide
        a_prime: coefficients de α' (n' >= 3, tous > 0)

    Returns:
        (α, ω, certificat)
    """
    a_prime = tuple(int(c) for c in a_prime)
    if len(a_prime) < 3 or any(c <= 0 for c in a_prime):
        raise ValueError(f"❌ α' exige n' >= 3 et des coefficients > 0, reçu {a_prime}")
    _check_alternating(xi)

    alpha_p = alpha_form(a_prime)
    sigma_1 = BraidWord(3, (1,))
    if not xi.letters:
        alpha, omega = alpha_p, concat(inverse(alpha_p), sigma_1)
    elif xi.letters[0] < 0:
        xi_rest = BraidWord(3, xi.letters[1:])
        alpha, omega = concat(xi_rest, alpha_p), inverse(alpha_p)
    else:
        alpha, omega = alpha_p, concat(inverse(alpha_p), sigma_1, xi)

    identity_holds = free_reduce(plat_word(alpha, omega)) == free_reduce(xi)
    certificate = TwoBridgeCertificate(
        identity_holds=identity_holds,
        alpha_coeffs=parse_alpha(alpha),
        omega_coeffs=parse_omega(omega),
    )
    return alpha, omega, certificate


def genus_positive_closure(strands: int, length: int) -> int:
    """Genre (c - s + 1)/2 de la clôture (noeud) d'une tresse positive."""
    twice = length - strands + 1
    if twice < 0 or twice % 2:
        raise ValueError(
            f"❌ c - s + 1 = {twice} : la clôture de {strands} brins et longueur {length} n'est pas un noeud"
        )
    return twice // 2


def permutation(w: BraidWord) -> Tuple[int, ...]:
    """Permutation sous-jacente : l'image (0-indexée) de chaque position de brin."""
    perm = list(range(w.strands))
    for v in w.letters:
        k = abs(v) - 1
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
    result = [0] * w.strands
    for position, strand in enumerate(perm):
        result[strand] = position
    return tuple(result)


def cycle_count(w: BraidWord) -> int:
    """Nombre de composantes de la clôture."""
    perm = permutation(w)
    seen = set()
    cycles = 0
    for start in range(len(perm)):
        if start in seen:
            continue
        cycles += 1
        k = start
        while k not in seen:
            seen.add(k)
            k = perm[k]
    return cycles


def is_knot(w: BraidWord) -> bool:
    return cycle_count(w) == 1


def word_ops(w: BraidWord) -> Dict[str, BraidWord]:
    """Les quatre opérations sur les mots ; generator_swap seulement sur 3 brins."""
    ops = {"inverse": inverse(w), "mirror": mirror(w), "reverse": reverse(w)}
    if w.strands == 3:
        ops["generator_swap"] = generator_swap(w)
    return ops
