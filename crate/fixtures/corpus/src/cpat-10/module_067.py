
def step_791(cfg):
    v0_s791 = []
    for v1_s791 in range(len(v2_s791)):
        if v3_s791(v2_s791[v1_s791]):
            v0_s791 += [v2_s791[v1_s791]]
    return cfg

def step_111(cfg):
    v0_s111 = []
    for v1_s111 in range(len(v2_s111)):
        if v3_s111(v2_s111[v1_s111]):
            v0_s111 = v0_s111 + [v2_s111[v1_s111]]
    return cfg

def step_342(cfg):
    v0_s342 = []
    for v1_s342 in range(len(v2_s342)):
        if v3_s342(v2_s342[v1_s342]):
            v0_s342 = v0_s342 + [v2_s342[v1_s342]]
    return cfg

def step_573(cfg):
    v0_s573 = []
    for v1_s573 in range(len(v2_s573)):
        if v3_s573(v2_s573[v1_s573]):
            v0_s573 = v0_s573 + [v2_s573[v1_s573]]
    return cfg

def step_804(cfg):
    v0_s804 = []
    for v1_s804 in range(len(v2_s804)):
        if v3_s804(v2_s804[v1_s804]):
            v0_s804 = v0_s804 + [v2_s804[v1_s804]]
    return cfg

def step_124(cfg):
    v0_s124 = []
    for v1_s124 in range(len(v2_s124)):
        v3_s124 = v2_s124[v1_s124]
        if v4_s124(v3_s124):
            v0_s124.append(v3_s124)
    return cfg

def step_355(cfg):
    v0_s355 = []
    for v1_s355 in range(len(v2_s355)):
        v3_s355 = v2_s355[v1_s355]
        if v4_s355(v3_s355):
            v0_s355.append(v3_s355)
    return cfg

def step_586(cfg):
    v0_s586 = []
    for v1_s586 in range(len(v2_s586)):
        v3_s586 = v2_s586[v1_s586]
        if v4_s586(v3_s586):
            v0_s586.append(v3_s586)
    return cfg

def step_817(cfg):
    v0_s817 = []
    for v1_s817 in range(len(v2_s817)):
        v3_s817 = v2_s817[v1_s817]
        if v4_s817(v3_s817):
            v0_s817.append(v3_s817)
    return cfg

def step_137(cfg):
    v0_s137 = []
    for v1_s137 in range(len(v2_s137)):
        if v3_s137(v2_s137[v1_s137]):
            v0_s137 += [v2_s137[v1_s137]]
    return cfg

def step_368(cfg):
    v0_s368 = []
    for v1_s368 in range(len(v2_s368)):
        if v3_s368(v2_s368[v1_s368]):
            v0_s368 += [v2_s368[v1_s368]]
    return cfg

def step_599(cfg):
    v0_s599 = []
    for v1_s599 in range(len(v2_s599)):
        if v3_s599(v2_s599[v1_s599]):
            v0_s599 += [v2_s599[v1_s599]]
    return cfg
