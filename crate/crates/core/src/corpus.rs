//! Built-in group corpus.
//!
//! Every entry is an embedded group file under `corpus/`. The regular
//! families are also constructible here; a test checks the files against
//! these constructions (set `DST_REGEN_CORPUS=1` to rewrite them).

use crate::group::file::GroupFile;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub text: &'static str,
}

impl CorpusEntry {
    pub fn file(&self) -> GroupFile {
        GroupFile::parse(self.text).expect("corpus files are well formed")
    }

    pub fn group(&self) -> PermGroup {
        self.file().to_group()
    }
}

macro_rules! entry {
    ($name:literal) => {
        CorpusEntry {
            name: $name,
            text: include_str!(concat!("../corpus/", $name, ".grp")),
        }
    };
}

static ENTRIES: &[CorpusEntry] = &[
    entry!("C2"),
    entry!("C3"),
    entry!("C4"),
    entry!("C5"),
    entry!("C6"),
    entry!("C7"),
    entry!("C8"),
    entry!("C9"),
    entry!("C10"),
    entry!("C11"),
    entry!("C12"),
    entry!("D3"),
    entry!("D4"),
    entry!("D5"),
    entry!("D6"),
    entry!("D7"),
    entry!("D8"),
    entry!("D9"),
    entry!("D10"),
    entry!("D11"),
    entry!("D12"),
    entry!("S2"),
    entry!("S3"),
    entry!("S4"),
    entry!("S5"),
    entry!("S6"),
    entry!("S7"),
    entry!("S8"),
    entry!("A3"),
    entry!("A4"),
    entry!("A5"),
    entry!("A6"),
    entry!("A7"),
    entry!("A8"),
    entry!("S4_on_2sets"),
    entry!("S5_on_2sets"),
    entry!("S6_on_2sets"),
    entry!("S7_on_2sets"),
    entry!("S6_on_3sets"),
    entry!("S7_on_3sets"),
    entry!("M11"),
    entry!("M12"),
];

pub fn entries() -> &'static [CorpusEntry] {
    ENTRIES
}

pub fn get(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

fn cycle(n: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    Permutation::from_cycles(n, &[points.into_iter().collect()]).unwrap()
}

fn long_cycle(n: usize) -> Permutation {
    cycle(n, 1..=n)
}

/// `C_n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> PermGroup {
    PermGroup::new(vec![long_cycle(n)]).unwrap()
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon.
pub fn dihedral(n: usize) -> PermGroup {
    let pairs: Vec<Vec<usize>> = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
    let reflection = Permutation::from_cycles(n, &pairs).unwrap();
    PermGroup::new(vec![long_cycle(n), reflection]).unwrap()
}

pub fn symmetric(n: usize) -> PermGroup {
    match n {
        0 | 1 => PermGroup::trivial(n.max(1)),
        2 => PermGroup::new(vec![cycle(2, [1, 2])]).unwrap(),
        _ => PermGroup::new(vec![cycle(n, [1, 2]), long_cycle(n)]).unwrap(),
    }
}

/// Generated by the 3-cycles `(1 2 i)`.
pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n.max(1));
    }
    PermGroup::new((3..=n).map(|i| cycle(n, [1, 2, i])).collect()).unwrap()
}

/// The file contents a family entry is expected to hold, or `None` for
/// entries stored verbatim (the Mathieu groups).
pub fn generated_text(name: &str) -> Option<String> {
    let (group, comment) = if let Some(rest) = name.strip_suffix("_on_2sets") {
        let m: usize = rest.strip_prefix('S')?.parse().ok()?;
        (
            symmetric(m).induced_subset_action(2).ok()?,
            format!("S_{m} acting on 2-subsets in lexicographic order"),
        )
    } else if let Some(rest) = name.strip_suffix("_on_3sets") {
        let m: usize = rest.strip_prefix('S')?.parse().ok()?;
        (
            symmetric(m).induced_subset_action(3).ok()?,
            format!("S_{m} acting on 3-subsets in lexicographic order"),
        )
    } else {
        let (family, n) = name.split_at(1);
        let n: usize = n.parse().ok()?;
        match family {
            "C" => (cyclic(n), format!("cyclic group C_{n}, regular action")),
            "D" => (
                dihedral(n),
                format!("dihedral group of order {} on {n} points", 2 * n),
            ),
            "S" => (
                symmetric(n),
                format!("symmetric group S_{n}, natural action"),
            ),
            "A" => (
                alternating(n),
                format!("alternating group A_{n}, natural action"),
            ),
            _ => return None,
        }
    };
    let mut file = GroupFile::from_group(&group);
    file.comments.push(format!(" {comment}"));
    Some(file.to_string())
}
