use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};

use crate::Format;

/// Picks the requested format, or the first supported one.
pub fn choose(requested: Option<Format>, supported: &[Format], command: &str) -> Result<Format> {
    match requested {
        None => Ok(supported[0]),
        Some(f) if supported.contains(&f) => Ok(f),
        Some(f) => bail!("{command} does not support --format {}", f.extension()),
    }
}

/// Prints `body` or writes it to `<out>/<stem>.<ext>`.
pub fn write(out: Option<&Path>, stem: &str, format: Format, body: &str) -> Result<()> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let path = dir.join(format!("{stem}.{}", format.extension()));
            fs::write(&path, body).with_context(|| format!("writing {}", path.display()))?;
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            if !body.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

pub fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}
