import streamlit as st
import pandas as pd
import plotly.express as px

import config
from branch_analysis import verify_all
from cli import format_edit_script, parse_graph
from graph_core import (
    biclique_sides,
    connected_components,
    find_induced_p4,
    find_odd_cycle,
    find_triangle,
    induced_subgraph,
    is_bicluster,
    symmetric_difference,
)
from solver import SearchStats, solve_minimum

# ============================
# Configuração da página
# ============================
st.set_page_config(page_title="Bicluster Editing", page_icon="🧩", layout="wide")
st.title("🧩 Bicluster Editing - Árvore de busca O*(3.116^k)")
st.markdown("---")

try:
    config.validate()
except config.ConfigError as e:
    st.error(f"❌ {e}")
    st.stop()

EXEMPLO = """# P4 mais um triângulo isolado
7 6
0 1
1 2
2 3
4 5
5 6
4 6
"""


# ============================
# Análise de ramificação
# ============================
@st.cache_data(show_spinner="Calculando Fmin de todos os casos...")
def load_report(rules: tuple, mirror_reduce: bool):
    report = verify_all(rules, mirror_reduce=mirror_reduce, strict=False)
    por_regra = {r.upper(): report.rule_maximum(r.upper()) for r in rules}
    return report.to_dataframe(), report.maximum, report.argmax, report.passed, report.bound, por_regra


st.sidebar.header("⚙️ Análise de ramificação")
regras_sel = st.sidebar.multiselect("Regras", ["b1", "b2", "b3"], default=["b1", "b2", "b3"])
espelho = st.sidebar.checkbox("Remover casos espelhados (inversão do P4)", value=False)

if not regras_sel:
    st.warning("⚠️ Selecione ao menos uma regra.")
    st.stop()

try:
    df, maximo, argmax, aprovado, limite, por_regra = load_report(tuple(regras_sel), espelho)
except Exception as e:
    st.error(f"❌ Erro ao calcular os números de ramificação: {e}")
    st.stop()

st.markdown("### 📊 Números de ramificação")
col1, col2, col3, col4 = st.columns(4)
with col1:
    st.metric("Casos", f"{len(df):,}")
with col2:
    st.metric("Máximo", f"{maximo:.6f}")
with col3:
    st.metric("Limite", f"{limite}")
with col4:
    st.metric("Caso do máximo", argmax[0])

for coluna, (regra, valor) in zip(st.columns(len(por_regra)), por_regra.items()):
    with coluna:
        st.metric(f"Máximo {regra}", f"{valor:.6f}")

if aprovado:
    st.success(f"✅ Máximo {maximo:.6f} dentro do limite {limite}.")
else:
    st.error(f"❌ Máximo {maximo:.6f} acima do limite {limite}: {', '.join(argmax)}")

col1, col2 = st.columns(2)
with col1:
    fig = px.histogram(df, x="branching_number", color="rule", nbins=40, title="Distribuição dos números de ramificação")
    st.plotly_chart(fig, use_container_width=True)
with col2:
    tamanhos = df.groupby(["rule", "size"]).size().reset_index(name="casos").rename(columns={"size": "filhos"})
    fig = px.bar(tamanhos, x="filhos", y="casos", color="rule", barmode="group", title="Número de filhos por caso")
    st.plotly_chart(fig, use_container_width=True)

with st.expander("📋 Ver todos os casos"):
    st.dataframe(df.sort_values("branching_number", ascending=False).reset_index(drop=True), use_container_width=True)


# ============================
# Resolver um grafo
# ============================
st.markdown("### 🔧 Resolver um grafo")
texto = st.text_area("Grafo (formato 'n m' e uma aresta 'u v' por linha)", value=EXEMPLO, height=220)

try:
    g = parse_graph(texto)
except Exception as e:
    st.error(f"❌ Grafo inválido: {e}")
    st.stop()

col1, col2, col3 = st.columns(3)
with col1:
    st.metric("Vértices", g.n)
with col2:
    st.metric("Arestas", g.edge_count)
with col3:
    st.metric("Componentes", len(connected_components(g)))

if is_bicluster(g):
    st.success("✅ O grafo já é bicluster.")
    st.stop()

triangulo = find_triangle(g)
ciclo = find_odd_cycle(g) if triangulo is None else None
if triangulo is not None:
    st.info(f"ℹ️ Não é bicluster: triângulo {triangulo}")
elif ciclo is not None:
    st.info(f"ℹ️ Não é bicluster: ciclo ímpar {ciclo}")
else:
    st.info(f"ℹ️ Não é bicluster: P4 induzido {tuple(find_induced_p4(g))}")

if st.button("Calcular edição mínima"):
    stats = SearchStats()
    with st.spinner("🔄 Buscando conjunto de edição mínimo..."):
        solucao = solve_minimum(g, stats)
    editado = symmetric_difference(g, solucao.edits)
    verificado = is_bicluster(editado)

    col1, col2 = st.columns(2)
    with col1:
        st.metric("k mínimo", solucao.size)
    with col2:
        st.metric("Nós visitados", f"{stats.nodes:,}")
    st.code(format_edit_script(g, solucao.edits), language="text")
    if verificado:
        st.success("✅ Script verificado: o grafo editado é bicluster.")
    else:
        st.error("❌ O grafo editado não é bicluster.")

    bicliques = []
    for componente in connected_components(editado):
        sub, mapa = induced_subgraph(editado, componente)
        lados = biclique_sides(sub)
        if lados is not None:
            bicliques.append({
                "lado 1": " ".join(str(mapa[v]) for v in lados[0]),
                "lado 2": " ".join(str(mapa[v]) for v in lados[1]),
            })
    with st.expander("📋 Bicliques do grafo editado"):
        st.dataframe(pd.DataFrame(bicliques), use_container_width=True)

    regras = pd.DataFrame({"regra": list(stats.rules), "aplicações": list(stats.rules.values())})
    st.plotly_chart(px.bar(regras, x="regra", y="aplicações", title="Aplicações por regra"), use_container_width=True)

st.markdown("---")
st.markdown("🧩 Bicluster Editing - ramificação B1/B2/B3 com caso base por componentes")
