//! Line-oriented `[section]` files shared by code configurations and table
//! files.
//!
//! A section header may be followed by entries on the same line. An entry
//! starts at a whitespace-separated token `key=value` whose key is known to
//! the section; the following tokens up to the next entry belong to its
//! value, so polynomial values may contain spaces. `#` starts a comment.

use crate::DecoderError;

/// One `key=value` entry and the 1-based line it starts on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Entry {
    pub key: String,
    pub value: String,
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Section {
    pub name: String,
    pub line: usize,
    pub entries: Vec<Entry>,
}

impl Section {
    /// The values of every entry named `key`, in file order.
    pub fn values<'a>(&'a self, key: &'a str) -> impl Iterator<Item = &'a Entry> + 'a {
        self.entries.iter().filter(move |e| e.key == key)
    }

    fn entries_named(&self, key: &str) -> Vec<&Entry> {
        self.entries.iter().filter(|e| e.key == key).collect()
    }

    /// The single value of `key`, if present; repeated keys are an error.
    pub fn single(&self, key: &str) -> Result<Option<&Entry>, DecoderError> {
        match self.entries_named(key).as_slice() {
            [] => Ok(None),
            [only] => Ok(Some(only)),
            [_, second, ..] => {
                Err(config_error(second.line, format!("'{key}' is given more than once in [{}]", self.name)))
            }
        }
    }

    pub fn required(&self, key: &str) -> Result<&Entry, DecoderError> {
        self.single(key)?
            .ok_or_else(|| config_error(self.line, format!("[{}] needs '{key}='", self.name)))
    }
}

pub(crate) fn config_error(line: usize, message: impl Into<String>) -> DecoderError {
    DecoderError::Config { line, message: message.into() }
}

/// Splits `text` into sections. `known_keys` lists, for each accepted
/// section name, the keys that may start an entry.
pub(crate) fn parse_sections(text: &str, known_keys: &[(&str, &[&str])]) -> Result<Vec<Section>, DecoderError> {
    let mut sections: Vec<Section> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let mut line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let (name, after) = rest
                .split_once(']')
                .ok_or_else(|| config_error(line_no, "unterminated section header"))?;
            let name = name.trim();
            if !known_keys.iter().any(|(s, _)| *s == name) {
                return Err(config_error(line_no, format!("unknown section [{name}]")));
            }
            sections.push(Section { name: name.to_string(), line: line_no, entries: Vec::new() });
            line = after.trim();
            if line.is_empty() {
                continue;
            }
        }
        let section = sections
            .last_mut()
            .ok_or_else(|| config_error(line_no, "entry outside of any section"))?;
        let keys = known_keys.iter().find(|(s, _)| *s == section.name).map_or(&[][..], |(_, k)| *k);
        let mut current: Option<Entry> = None;
        for token in line.split_whitespace() {
            let starts_entry = token.split_once('=').filter(|(key, _)| keys.contains(key));
            match (starts_entry, current.as_mut()) {
                (Some((key, value)), _) => {
                    section.entries.extend(current.take());
                    current = Some(Entry { key: key.to_string(), value: value.to_string(), line: line_no });
                }
                (None, Some(entry)) => {
                    entry.value.push(' ');
                    entry.value.push_str(token);
                }
                (None, None) => {
                    return Err(config_error(
                        line_no,
                        format!("expected one of {} in [{}], found '{token}'", key_list(keys), section.name),
                    ))
                }
            }
        }
        section.entries.extend(current);
    }
    Ok(sections)
}

fn key_list(keys: &[&str]) -> String {
    keys.iter().map(|k| format!("'{k}='")).collect::<Vec<_>>().join(", ")
}

/// Renders entries of one section, one per line.
pub(crate) fn render_section(out: &mut String, name: &str, entries: &[(&str, String)]) {
    out.push_str(&format!("[{name}]\n"));
    for (key, value) in entries {
        out.push_str(&format!("{key}={value}\n"));
    }
}
