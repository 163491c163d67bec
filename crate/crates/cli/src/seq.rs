//! Sequence arguments: `parts=1,2,2,3` or `gen=<name> k=<int>`, plus loose `key=value` tokens.

use std::collections::BTreeMap;

use partilog_core::PartSpec;

#[derive(Debug, Default)]
pub struct Tokens {
    map: BTreeMap<String, String>,
}

impl Tokens {
    pub fn parse(raw: &[String]) -> Result<Self, String> {
        let mut map = BTreeMap::new();
        for t in raw {
            let (k, v) = t
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {t:?}"))?;
            let key = k.trim().to_ascii_lowercase();
            if map.insert(key.clone(), v.trim().to_string()).is_some() {
                return Err(format!("{key} given twice"));
            }
        }
        Ok(Tokens { map })
    }

    pub fn take(&mut self, key: &str) -> Option<String> {
        self.map.remove(key)
    }

    pub fn finish(self) -> Result<(), String> {
        match self.map.keys().next() {
            Some(k) => Err(format!("unknown argument {k:?}")),
            None => Ok(()),
        }
    }

    pub fn spec(&mut self) -> Result<PartSpec, String> {
        let parts = self.take("parts");
        let gen = self.take("gen");
        let k = self.take("k");
        match (parts, gen) {
            (Some(_), Some(_)) => Err("give either parts= or gen=, not both".into()),
            (None, None) => Err("missing sequence: parts=a,b,... or gen=<name> k=<int>".into()),
            (Some(list), None) => {
                let mut parts = list
                    .split(',')
                    .map(|s| s.trim().parse::<u64>().map_err(|_| format!("bad part {s:?}")))
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some(k) = k {
                    let k = parse_k(&k)?;
                    if k != parts.len() {
                        return Err(format!("k={k} but {} parts given", parts.len()));
                    }
                }
                parts.sort_unstable();
                PartSpec::new(parts).map_err(|e| e.to_string())
            }
            (None, Some(name)) => {
                let k = parse_k(&k.ok_or("gen= needs k=<int>")?)?;
                let spec = match name.as_str() {
                    "ones" => PartSpec::ones(k),
                    "naturals" => PartSpec::naturals(k),
                    "colored-naturals" => PartSpec::colored_naturals(k),
                    "colored-primes" => PartSpec::colored_primes(k),
                    other => return Err(format!("unknown generator {other:?}")),
                };
                spec.map_err(|e| e.to_string())
            }
        }
    }
}

fn parse_k(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(k) if k > 0 => Ok(k),
        _ => Err(format!("k must be a positive integer, got {s:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_of(args: &[&str]) -> Result<PartSpec, String> {
        let raw: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut t = Tokens::parse(&raw)?;
        let s = t.spec()?;
        t.finish()?;
        Ok(s)
    }

    #[test]
    fn grammar() {
        assert_eq!(spec_of(&["parts=1,2,2,3"]).unwrap().parts(), &[1, 2, 2, 3]);
        assert_eq!(spec_of(&["parts=3,1"]).unwrap().parts(), &[1, 3]);
        assert_eq!(spec_of(&["gen=colored-naturals", "k=6"]).unwrap().parts(), &[1, 2, 2, 3, 3, 3]);
        assert_eq!(spec_of(&["gen=colored-primes", "k=4"]).unwrap().parts(), &[2, 3, 3, 5]);
        assert!(spec_of(&["gen=naturals"]).is_err());
        assert!(spec_of(&["gen=evens", "k=3"]).is_err());
        assert!(spec_of(&["parts=1,0"]).is_err());
        assert!(spec_of(&["parts=1,2", "x=3"]).is_err());
        assert!(spec_of(&["parts=1,2", "k=3"]).is_err());
    }
}
