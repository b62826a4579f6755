//! Text formats: AFS specification files, APX finite frameworks and
//! combination manifests.
//!
//! An AFS file has three keyed entries; `#` starts a comment and indented
//! lines continue the previous entry:
//!
//! ```text
//! alphabet: 0
//! arguments: 0 0*
//! attack: tl(I)
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use crate::automata::Alphabet;
use crate::error::{Error, Result};
use crate::expr::{parse_attack_expr, parse_regex};
use crate::spec::{combine, encode_finite_af, AfSpec, Component, CrossAttack, FiniteAf};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Parses an AFS specification.
pub fn parse_afs(text: &str) -> Result<AfSpec> {
    const KEYS: [&str; 3] = ["alphabet", "arguments", "attack"];
    let mut values: [Option<(usize, String)>; 3] = [None, None, None];
    let mut current: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        if line.starts_with(char::is_whitespace) {
            let Some(k) = current else {
                return Err(format_err(line_no, "continuation line without an entry"));
            };
            let entry = values[k].as_mut().expect("current entry exists");
            entry.1.push(' ');
            entry.1.push_str(line.trim());
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(format_err(line_no, format!("expected `key: value`, found `{}`", line.trim())));
        };
        let key = key.trim();
        let Some(k) = KEYS.iter().position(|&x| x == key) else {
            return Err(format_err(line_no, format!("unknown key `{key}`")));
        };
        if values[k].is_some() {
            return Err(format_err(line_no, format!("duplicate key `{key}`")));
        }
        values[k] = Some((line_no, value.trim().to_string()));
        current = Some(k);
    }
    let [alphabet, arguments, attack] = values;
    let missing = |k: &str| format_err(0, format!("missing `{k}` entry"));
    let (line_a, alphabet) = alphabet.ok_or_else(|| missing("alphabet"))?;
    let (line_x, arguments) = arguments.ok_or_else(|| missing("arguments"))?;
    let (line_e, attack) = attack.ok_or_else(|| missing("attack"))?;

    let alphabet = Alphabet::new(alphabet.split_whitespace()).map_err(|e| format_err(line_a, e.to_string()))?;
    let regex = parse_regex(&arguments, &alphabet).map_err(|e| format_err(line_x, format!("arguments: {e}")))?;
    let expr = parse_attack_expr(&attack, &alphabet).map_err(|e| format_err(line_e, format!("attack: {e}")))?;
    AfSpec::new(alphabet, regex, expr)
}

/// Renders a specification in the AFS format accepted by [`parse_afs`].
pub fn render_afs(spec: &AfSpec) -> String {
    spec.to_string()
}

/// Parses a finite framework in APX syntax (`arg(x).` and `att(x,y).`).
/// Blank lines and lines starting with `%` or `#` are ignored.
pub fn parse_apx(text: &str) -> Result<FiniteAf> {
    let mut names: Vec<String> = Vec::new();
    let mut attacks: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        if line.is_empty() || line.starts_with('%') || line.starts_with('#') {
            continue;
        }
        let body = line
            .strip_suffix(").")
            .ok_or_else(|| format_err(line_no, format!("malformed line `{}`", raw.trim())))?;
        if let Some(name) = body.strip_prefix("arg(") {
            if names.iter().any(|n| n == name) {
                return Err(format_err(line_no, format!("duplicate argument `{name}`")));
            }
            names.push(name.to_string());
        } else if let Some(pair) = body.strip_prefix("att(") {
            let (x, y) = pair
                .split_once(',')
                .ok_or_else(|| format_err(line_no, format!("malformed attack `{}`", raw.trim())))?;
            attacks.push((line_no, x.to_string(), y.to_string()));
        } else {
            return Err(format_err(line_no, format!("malformed line `{}`", raw.trim())));
        }
    }
    let mut pairs = Vec::new();
    for (line_no, x, y) in attacks {
        let index = |n: &str| {
            names
                .iter()
                .position(|m| m == n)
                .ok_or_else(|| format_err(line_no, format!("attack mentions undeclared argument `{n}`")))
        };
        pairs.push((index(&x)?, index(&y)?));
    }
    FiniteAf::new(names, pairs)
}

/// Renders a finite framework in APX syntax.
pub fn render_apx(f: &FiniteAf) -> String {
    let mut out = String::new();
    for n in f.names() {
        out.push_str(&format!("arg({n}).\n"));
    }
    for &(x, y) in f.attacks() {
        out.push_str(&format!("att({},{}).\n", f.names()[x], f.names()[y]));
    }
    out
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn import_apx(path: &Path) -> Result<AfSpec> {
    encode_finite_af(&parse_apx(&read(path)?)?)
}

/// Loads a specification, importing `.apx` files through the finite encoding.
pub fn load_spec(path: &Path) -> Result<AfSpec> {
    if path.extension().is_some_and(|e| e == "apx") {
        import_apx(path)
    } else {
        parse_afs(&read(path)?)
    }
}

/// A parsed combination manifest with paths resolved against its directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifest {
    pub finite: Option<PathBuf>,
    pub parts: Vec<(String, PathBuf)>,
    /// `(line, from, to, attacker word, attacked word)`
    pub cross: Vec<(usize, String, String, String, String)>,
}

/// Parses a manifest with `part: NAME FILE`, `finite: FILE` and
/// `cross: FROM -> TO : u v` lines. The finite part is named `finite`.
pub fn parse_manifest(text: &str, base: &Path) -> Result<Manifest> {
    let mut m = Manifest {
        finite: None,
        parts: Vec::new(),
        cross: Vec::new(),
    };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            return Err(format_err(line_no, format!("expected `key: value`, found `{line}`")));
        };
        let value = value.trim();
        match key.trim() {
            "part" => {
                let fields: Vec<&str> = value.split_whitespace().collect();
                let [name, file] = fields[..] else {
                    return Err(format_err(line_no, "expected `part: NAME FILE`"));
                };
                if name == "finite" || m.parts.iter().any(|(n, _)| n == name) {
                    return Err(format_err(line_no, format!("duplicate component name `{name}`")));
                }
                m.parts.push((name.to_string(), base.join(file)));
            }
            "finite" => {
                if m.finite.is_some() {
                    return Err(format_err(line_no, "duplicate `finite` entry"));
                }
                m.finite = Some(base.join(value));
            }
            "cross" => {
                let parsed = value.split_once(':').and_then(|(ends, words)| {
                    let (from, to) = ends.split_once("->")?;
                    let ws: Vec<&str> = words.split_whitespace().collect();
                    match ws[..] {
                        [u, v] => Some((from.trim(), to.trim(), u, v)),
                        _ => None,
                    }
                });
                let Some((from, to, u, v)) = parsed else {
                    return Err(format_err(line_no, "expected `cross: FROM -> TO : u v`"));
                };
                m.cross
                    .push((line_no, from.into(), to.into(), u.into(), v.into()));
            }
            other => return Err(format_err(line_no, format!("unknown key `{other}`"))),
        }
    }
    Ok(m)
}

/// Loads every component of a manifest and combines them.
pub fn load_combination(path: &Path) -> Result<AfSpec> {
    let base = path.parent().unwrap_or(Path::new("."));
    let m = parse_manifest(&read(path)?, base)?;
    let finite = m
        .finite
        .as_deref()
        .map(|p| parse_apx(&read(p)?))
        .transpose()?;
    let parts = m
        .parts
        .iter()
        .map(|(_, p)| load_spec(p))
        .collect::<Result<Vec<_>>>()?;

    let resolve = |line: usize, name: &str| -> Result<(Component, Alphabet)> {
        if name == "finite" {
            let f = finite
                .as_ref()
                .ok_or_else(|| format_err(line, "no finite part declared"))?;
            return Ok((Component::Finite, Alphabet::new(f.names().iter().cloned())?));
        }
        let i = m
            .parts
            .iter()
            .position(|(n, _)| n == name)
            .ok_or_else(|| format_err(line, format!("unknown component `{name}`")))?;
        Ok((Component::Part(i), parts[i].alphabet().clone()))
    };
    let mut cross: Vec<CrossAttack> = Vec::new();
    for (line, from, to, u, v) in &m.cross {
        let (cf, af) = resolve(*line, from)?;
        let (ct, at) = resolve(*line, to)?;
        let u = af.parse_word(u).map_err(|e| format_err(*line, e.to_string()))?;
        let v = at.parse_word(v).map_err(|e| format_err(*line, e.to_string()))?;
        match cross.iter_mut().find(|c| c.from == cf && c.to == ct) {
            Some(c) => c.pairs.push((u, v)),
            None => cross.push(CrossAttack {
                from: cf,
                to: ct,
                pairs: vec![(u, v)],
            }),
        }
    }
    combine(finite.as_ref(), &parts, &cross)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn afs_round_trip() {
        let text = "# chain\nalphabet: 0\narguments: 0 0*\nattack: tl(I)  # each attacks the next\n";
        let s = parse_afs(text).unwrap();
        assert_eq!(render_afs(&s), "alphabet: 0\narguments: 0 0*\nattack: tl(I)\n");
        let again = parse_afs(&render_afs(&s)).unwrap();
        assert_eq!(again.attack(), s.attack());
    }

    #[test]
    fn afs_continuation_and_errors() {
        let text = "alphabet: 0\narguments: 0\n  0*\nattack: (I . [0])\n   U tl(I)\n";
        let s = parse_afs(text).unwrap();
        assert_eq!(s.attack().to_string(), "I . [0] U tl(I)");
        for (bad, line) in [
            ("alphabet: 0\nfoo: 1\n", 2),
            ("alphabet: 0\nalphabet: 0\n", 2),
            ("  0\n", 1),
            ("alphabet: 0\narguments: 0 1\nattack: I\n", 2),
            ("alphabet: 0\narguments: 0\nattack: I I\n", 3),
        ] {
            match parse_afs(bad) {
                Err(Error::Format { line: l, .. }) => assert_eq!(l, line, "{bad:?}"),
                other => panic!("{bad:?}: {other:?}"),
            }
        }
        assert!(parse_afs("alphabet: 0\narguments: 0*\nattack: I\n").is_err());
    }

    #[test]
    fn apx_parsing() {
        let f = parse_apx("% comment\narg(a).\narg( b ).\n\natt(a, b).\n").unwrap();
        assert_eq!(f.names(), ["a", "b"]);
        assert!(f.attacks_pair(0, 1));
        assert_eq!(render_apx(&f), "arg(a).\narg(b).\natt(a,b).\n");
        match parse_apx("arg(a).\natt(a,b).\n") {
            Err(Error::Format { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_apx("arg(a).\nfoo\n") {
            Err(Error::Format { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        let empty = encode_finite_af(&parse_apx("").unwrap()).unwrap();
        assert!(!empty.warnings().is_empty());
    }

    #[test]
    fn manifest_parsing() {
        let m = parse_manifest(
            "finite: f.apx\npart: chain chain.afs\ncross: finite -> chain : q 00\n",
            Path::new("/base"),
        )
        .unwrap();
        assert_eq!(m.finite, Some(PathBuf::from("/base/f.apx")));
        assert_eq!(m.parts, vec![("chain".to_string(), PathBuf::from("/base/chain.afs"))]);
        assert_eq!(m.cross[0].1, "finite");
        assert!(parse_manifest("cross: a b\n", Path::new(".")).is_err());
        assert!(parse_manifest("part: x\n", Path::new(".")).is_err());
    }
}
