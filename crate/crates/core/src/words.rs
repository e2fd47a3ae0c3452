//! Bracketed words: the free operated monoid on a set of generators.
//!
//! A word is a finite sequence of atoms, each a generator letter or a
//! bracket wrapping another word; the empty sequence is the unit 1.
//! Star atoms mark holes for substitution contexts. This module owns
//! the purely structural operations: measures, canonical decomposition,
//! normal-form recognition, substitution at the word level, and the
//! enumeration and classification of subword placements.

use std::fmt;

/// One factor of a bracketed word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Letter(String),
    Bracket(Word),
    /// Hole marker; index 1 for one-hole contexts, 1 and 2 for two-hole.
    Star(u8),
}

/// A bracketed word. The empty atom list is the monoid unit 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Atom>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn letter(name: &str) -> Word {
        Word(vec![Atom::Letter(name.to_string())])
    }

    pub fn bracket(inner: Word) -> Word {
        Word(vec![Atom::Bracket(inner)])
    }

    pub fn star(index: u8) -> Word {
        Word(vec![Atom::Star(index)])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut atoms = self.0.clone();
        atoms.extend(other.0.iter().cloned());
        Word(atoms)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    /// True when every atom is a letter (a plain monoid word).
    pub fn is_letters_only(&self) -> bool {
        self.0.iter().all(|a| matches!(a, Atom::Letter(_)))
    }

    /// Maximum bracket nesting level.
    pub fn depth(&self) -> usize {
        self.0
            .iter()
            .map(|a| match a {
                Atom::Bracket(w) => w.depth() + 1,
                _ => 0,
            })
            .max()
            .unwrap_or(0)
    }

    /// Number of top-level atoms; 0 for the unit.
    pub fn breadth(&self) -> usize {
        self.0.len()
    }

    /// Number of top-level bracket atoms.
    pub fn p_breadth(&self) -> usize {
        self.0
            .iter()
            .filter(|a| matches!(a, Atom::Bracket(_)))
            .count()
    }

    /// Total number of brackets at all nesting levels.
    pub fn deg_p(&self) -> usize {
        self.0
            .iter()
            .map(|a| match a {
                Atom::Bracket(w) => w.deg_p() + 1,
                _ => 0,
            })
            .sum()
    }

    /// Number of star atoms, counted through all levels.
    pub fn star_count(&self, index: u8) -> usize {
        self.0
            .iter()
            .map(|a| match a {
                Atom::Star(i) if *i == index => 1,
                Atom::Bracket(w) => w.star_count(index),
                _ => 0,
            })
            .sum()
    }

    /// Occurrences of the generator `name`, counted through all levels.
    pub fn letter_count(&self, name: &str) -> usize {
        self.0
            .iter()
            .map(|a| match a {
                Atom::Letter(g) if g == name => 1,
                Atom::Bracket(w) => w.letter_count(name),
                _ => 0,
            })
            .sum()
    }

    /// Generator names occurring anywhere in the word, sorted, deduplicated.
    pub fn letters(&self) -> Vec<String> {
        fn walk(w: &Word, out: &mut Vec<String>) {
            for a in &w.0 {
                match a {
                    Atom::Letter(g) => out.push(g.clone()),
                    Atom::Bracket(inner) => walk(inner, out),
                    Atom::Star(_) => {}
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Maximal blocks of consecutive same-kind atoms: letter runs and
    /// single brackets, in order. The unit gives an empty list.
    pub fn standard_decomposition(&self) -> Vec<Block> {
        let mut blocks = Vec::new();
        let mut run: Vec<Atom> = Vec::new();
        for a in &self.0 {
            match a {
                Atom::Bracket(inner) => {
                    if !run.is_empty() {
                        blocks.push(Block::Letters(Word(std::mem::take(&mut run))));
                    }
                    blocks.push(Block::Bracket(inner.clone()));
                }
                other => run.push(other.clone()),
            }
        }
        if !run.is_empty() {
            blocks.push(Block::Letters(Word(run)));
        }
        blocks
    }

    /// True when no position at any level has two adjacent bracket atoms.
    pub fn is_rbnf(&self) -> bool {
        for pair in self.0.windows(2) {
            if matches!(pair[0], Atom::Bracket(_)) && matches!(pair[1], Atom::Bracket(_)) {
                return false;
            }
        }
        self.0.iter().all(|a| match a {
            Atom::Bracket(w) => w.is_rbnf(),
            _ => true,
        })
    }
}

/// Letters space-separated, brackets adjacent, unit printed as "1".
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut prev_letter = false;
        for a in &self.0 {
            match a {
                Atom::Letter(g) => {
                    if prev_letter {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", g)?;
                    prev_letter = true;
                }
                Atom::Bracket(w) => {
                    write!(f, "[{}]", w)?;
                    prev_letter = false;
                }
                Atom::Star(i) => {
                    if prev_letter {
                        write!(f, " ")?;
                    }
                    write!(f, "*{}", i)?;
                    prev_letter = true;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One factor of the standard decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Block {
    Letters(Word),
    Bracket(Word),
}

/// A word with exactly one hole (star index 1).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StarWord(Word);

impl StarWord {
    pub fn new(w: Word) -> Result<StarWord, String> {
        if w.star_count(1) == 1 && w.star_count(2) == 0 {
            Ok(StarWord(w))
        } else {
            Err(format!("not a one-hole context: {}", w))
        }
    }

    pub fn hole() -> StarWord {
        StarWord(Word::star(1))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn is_hole(&self) -> bool {
        self.0 == Word::star(1)
    }

    /// Replace the hole by `u`, splicing its atoms into the host level.
    pub fn substitute(&self, u: &Word) -> Word {
        substitute_star(&self.0, 1, u)
    }

    /// Plug another context into the hole, composing contexts.
    pub fn compose(&self, inner: &StarWord) -> StarWord {
        StarWord(substitute_star(&self.0, 1, &inner.0))
    }

    /// Bracket-descent path to the level holding the hole, plus the
    /// hole's atom index at that level.
    pub fn hole_position(&self) -> (Vec<usize>, usize) {
        fn find(w: &Word, path: &mut Vec<usize>) -> Option<usize> {
            for (i, a) in w.0.iter().enumerate() {
                match a {
                    Atom::Star(1) => return Some(i),
                    Atom::Bracket(inner) => {
                        path.push(i);
                        if let Some(j) = find(inner, path) {
                            return Some(j);
                        }
                        path.pop();
                    }
                    _ => {}
                }
            }
            None
        }
        let mut path = Vec::new();
        let idx = find(&self.0, &mut path).expect("validated star word");
        (path, idx)
    }
}

impl fmt::Display for StarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A word with exactly one hole of each index 1 and 2.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TwoStarWord(Word);

impl TwoStarWord {
    pub fn new(w: Word) -> Result<TwoStarWord, String> {
        if w.star_count(1) == 1 && w.star_count(2) == 1 {
            Ok(TwoStarWord(w))
        } else {
            Err(format!("not a two-hole context: {}", w))
        }
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    /// Fill both holes simultaneously.
    pub fn substitute(&self, u1: &Word, u2: &Word) -> Word {
        substitute_star(&substitute_star(&self.0, 1, u1), 2, u2)
    }

    /// Fill only the first hole, leaving a one-hole context on star 2.
    pub fn fill_first(&self, u1: &Word) -> Word {
        substitute_star(&self.0, 1, u1)
    }
}

fn substitute_star(w: &Word, index: u8, u: &Word) -> Word {
    let mut atoms = Vec::with_capacity(w.0.len() + u.0.len());
    for a in &w.0 {
        match a {
            Atom::Star(i) if *i == index => atoms.extend(u.0.iter().cloned()),
            Atom::Bracket(inner) => {
                atoms.push(Atom::Bracket(substitute_star(inner, index, u)))
            }
            other => atoms.push(other.clone()),
        }
    }
    Word(atoms)
}

/// An occurrence of `subword` in an ambient word, recorded by the
/// one-hole context that reproduces the ambient word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Placement {
    pub subword: Word,
    pub context: StarWord,
}

impl Placement {
    /// The level path and atom span the subword occupies.
    fn position(&self) -> (Vec<usize>, usize, usize) {
        let (path, idx) = self.context.hole_position();
        (path, idx, self.subword.0.len())
    }
}

/// Relative location of two placements in the same ambient word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Separated,
    Nested,
    Intersecting,
}

/// All contexts q with q(u) = w, one per occurrence. The unit subword
/// is not a meaningful occurrence and yields no placements.
pub fn enumerate_placements(w: &Word, u: &Word) -> Vec<Placement> {
    if u.is_unit() {
        return Vec::new();
    }
    let mut out = Vec::new();
    collect_placements(w, u, &StarWord::hole(), &mut out);
    out
}

fn collect_placements(host: &Word, u: &Word, outer: &StarWord, out: &mut Vec<Placement>) {
    let n = u.0.len();
    // Spans at this level.
    if host.0.len() >= n {
        for start in 0..=host.0.len() - n {
            if host.0[start..start + n] == u.0[..] {
                let mut atoms = host.0[..start].to_vec();
                atoms.push(Atom::Star(1));
                atoms.extend(host.0[start + n..].iter().cloned());
                let ctx = outer.compose(&StarWord(Word(atoms)));
                out.push(Placement {
                    subword: u.clone(),
                    context: ctx,
                });
            }
        }
    }
    // Recurse into brackets.
    for (i, a) in host.0.iter().enumerate() {
        if let Atom::Bracket(inner) = a {
            let mut atoms = host.0.clone();
            atoms[i] = Atom::Star(1);
            let step = outer.compose(&StarWord(Word(atoms)));
            let wrapped = step.compose(&StarWord(Word::bracket(Word::star(1))));
            collect_placements(inner, u, &wrapped, out);
        }
    }
}

/// Decide whether two occurrences are separated, nested (one inside
/// the other, including coincidence), or properly intersecting.
pub fn classify_placements(
    w: &Word,
    p1: &Placement,
    p2: &Placement,
) -> Result<Relation, String> {
    for p in [p1, p2] {
        if &p.context.substitute(&p.subword) != w {
            return Err(format!(
                "placement {} of {} is not an occurrence in {}",
                p.context, p.subword, w
            ));
        }
    }
    let (path1, s1, l1) = p1.position();
    let (path2, s2, l2) = p2.position();
    let m = path1
        .iter()
        .zip(path2.iter())
        .take_while(|(a, b)| a == b)
        .count();
    if m == path1.len() && m == path2.len() {
        // Same level: compare spans.
        let (a1, b1) = (s1, s1 + l1);
        let (a2, b2) = (s2, s2 + l2);
        if b1 <= a2 || b2 <= a1 {
            Ok(Relation::Separated)
        } else if (a1 <= a2 && b2 <= b1) || (a2 <= a1 && b1 <= b2) {
            Ok(Relation::Nested)
        } else {
            Ok(Relation::Intersecting)
        }
    } else if m == path1.len() {
        // p2 descends below p1's level at atom index path2[m].
        let k = path2[m];
        if s1 <= k && k < s1 + l1 {
            Ok(Relation::Nested)
        } else {
            Ok(Relation::Separated)
        }
    } else if m == path2.len() {
        let k = path1[m];
        if s2 <= k && k < s2 + l2 {
            Ok(Relation::Nested)
        } else {
            Ok(Relation::Separated)
        }
    } else {
        // Paths diverge inside distinct atoms.
        Ok(Relation::Separated)
    }
}
