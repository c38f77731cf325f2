//! Command-line wrapper: keygen, sign, verify, dh.
//!
//! Exit codes: 0 success / signature valid, 1 invalid signature or peer
//! key, 2 usage, I/O or format errors.

use clap::{Parser, Subcommand, ValueEnum};
use qdsa::{Curve25519, GaudrySchost, KeyPair, Scheme};
use rand::RngCore;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qdsa", version, about = "qDSA signatures and Diffie-Hellman on Kummer varieties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    /// Genus 1, the x-line of Curve25519
    C25519,
    /// Genus 2, the fast Kummer surface of the Gaudry-Schost curve
    Gs2,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a key pair from the OS RNG
    ///
    /// The secret key file holds the 32-byte seed; everything else is
    /// re-derived from it. The same key pair serves both signing and dh
    /// within this scheme; do not reuse it in other protocols.
    Keygen {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// Output path for the 32-byte secret seed (created mode 0600)
        #[arg(long)]
        sk: PathBuf,
        /// Output path for the 32-byte public key
        #[arg(long)]
        pk: PathBuf,
        /// Take the seed from the QDSA_TEST_SEED environment variable
        /// (64 hex digits) instead of the OS RNG. Test use only.
        #[arg(long)]
        allow_test_seed: bool,
    },
    /// Sign a message file
    Sign {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// Secret seed file
        #[arg(long)]
        sk: PathBuf,
        /// Message file, signed as raw bytes
        #[arg(long = "in")]
        input: PathBuf,
        /// Output path for the 64-byte signature
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a signature; exits 0 if valid, 1 if not
    Verify {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// Signer public key file
        #[arg(long)]
        pk: PathBuf,
        /// Message file
        #[arg(long = "in")]
        input: PathBuf,
        /// 64-byte signature file
        #[arg(long)]
        sig: PathBuf,
    },
    /// Derive a shared secret from our seed and a peer public key
    Dh {
        #[arg(long, value_enum)]
        scheme: SchemeArg,
        /// Secret seed file
        #[arg(long)]
        sk: PathBuf,
        /// Peer public key file
        #[arg(long)]
        pk: PathBuf,
        /// Output path for the 32-byte shared secret (created mode 0600)
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("qdsa: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Result<ExitCode, String> {
    match cmd {
        Cmd::Keygen {
            scheme,
            sk,
            pk,
            allow_test_seed,
        } => {
            let seed = obtain_seed(allow_test_seed)?;
            match scheme {
                SchemeArg::C25519 => keygen::<Curve25519>(&seed, &sk, &pk),
                SchemeArg::Gs2 => keygen::<GaudrySchost>(&seed, &sk, &pk),
            }
        }
        Cmd::Sign {
            scheme,
            sk,
            input,
            out,
        } => match scheme {
            SchemeArg::C25519 => sign_cmd::<Curve25519>(&sk, &input, &out),
            SchemeArg::Gs2 => sign_cmd::<GaudrySchost>(&sk, &input, &out),
        },
        Cmd::Verify {
            scheme,
            pk,
            input,
            sig,
        } => match scheme {
            SchemeArg::C25519 => verify_cmd::<Curve25519>(&pk, &input, &sig),
            SchemeArg::Gs2 => verify_cmd::<GaudrySchost>(&pk, &input, &sig),
        },
        Cmd::Dh {
            scheme,
            sk,
            pk,
            out,
        } => match scheme {
            SchemeArg::C25519 => dh_cmd::<Curve25519>(&sk, &pk, &out),
            SchemeArg::Gs2 => dh_cmd::<GaudrySchost>(&sk, &pk, &out),
        },
    }
}

fn obtain_seed(allow_test_seed: bool) -> Result<[u8; 32], String> {
    let env_seed = std::env::var_os("QDSA_TEST_SEED");
    if let Some(raw) = env_seed {
        if !allow_test_seed {
            return Err("QDSA_TEST_SEED is set; pass --allow-test-seed to use it, or unset it".into());
        }
        let text = raw
            .to_str()
            .ok_or("QDSA_TEST_SEED is not valid UTF-8")?
            .trim()
            .to_owned();
        let text = text.strip_prefix("0x").unwrap_or(&text);
        let bytes = hex::decode(text).map_err(|e| format!("QDSA_TEST_SEED is not hex: {e}"))?;
        bytes
            .try_into()
            .map_err(|_| "QDSA_TEST_SEED must be exactly 64 hex digits".into())
    } else if allow_test_seed {
        Err("--allow-test-seed given but QDSA_TEST_SEED is not set".into())
    } else {
        let mut seed = [0u8; 32];
        rand::rngs::OsRng.fill_bytes(&mut seed);
        Ok(seed)
    }
}

fn keygen<S: Scheme>(seed: &[u8; 32], sk: &Path, pk: &Path) -> Result<ExitCode, String> {
    let kp = KeyPair::<S>::from_seed(seed)
        .map_err(|e| format!("key generation failed: {e}; use a different seed"))?;
    write_secret(sk, seed)?;
    fs::write(pk, kp.public_key()).map_err(|e| format!("writing {}: {e}", pk.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn sign_cmd<S: Scheme>(sk: &Path, input: &Path, out: &Path) -> Result<ExitCode, String> {
    let kp = load_keypair::<S>(sk)?;
    let msg = read_file(input)?;
    let sig = kp.sign(&msg);
    fs::write(out, sig).map_err(|e| format!("writing {}: {e}", out.display()))?;
    Ok(ExitCode::SUCCESS)
}

fn verify_cmd<S: Scheme>(pk: &Path, input: &Path, sig: &Path) -> Result<ExitCode, String> {
    let pk = read_exact::<32>(pk, "public key")?;
    let msg = read_file(input)?;
    let sig = read_exact::<64>(sig, "signature")?;
    if qdsa::verify::<S>(&pk, &msg, &sig) {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("qdsa: invalid signature");
        Ok(ExitCode::from(1))
    }
}

fn dh_cmd<S: Scheme>(sk: &Path, pk: &Path, out: &Path) -> Result<ExitCode, String> {
    let kp = load_keypair::<S>(sk)?;
    let peer = read_exact::<32>(pk, "public key")?;
    match kp.dh(&peer) {
        Some(secret) => {
            write_secret(out, &secret)?;
            Ok(ExitCode::SUCCESS)
        }
        None => {
            eprintln!("qdsa: invalid peer public key");
            Ok(ExitCode::from(1))
        }
    }
}

fn load_keypair<S: Scheme>(sk: &Path) -> Result<KeyPair<S>, String> {
    let seed = read_exact::<32>(sk, "secret key")?;
    KeyPair::<S>::from_seed(&seed).map_err(|e| format!("{}: {e}", sk.display()))
}

fn read_file(path: &Path) -> Result<Vec<u8>, String> {
    fs::read(path).map_err(|e| format!("reading {}: {e}", path.display()))
}

fn read_exact<const N: usize>(path: &Path, what: &str) -> Result<[u8; N], String> {
    let data = read_file(path)?;
    let len = data.len();
    data.try_into()
        .map_err(|_| format!("{}: {} must be {} bytes, found {}", path.display(), what, N, len))
}

#[cfg(unix)]
fn write_secret(path: &Path, data: &[u8]) -> Result<(), String> {
    use std::os::unix::fs::OpenOptionsExt;
    let mut f = fs::OpenOptions::new()
        .write(true)
        .create(true)
        .truncate(true)
        .mode(0o600)
        .open(path)
        .map_err(|e| format!("creating {}: {e}", path.display()))?;
    f.write_all(data)
        .map_err(|e| format!("writing {}: {e}", path.display()))
}

#[cfg(not(unix))]
fn write_secret(path: &Path, data: &[u8]) -> Result<(), String> {
    fs::write(path, data).map_err(|e| format!("writing {}: {e}", path.display()))
}
