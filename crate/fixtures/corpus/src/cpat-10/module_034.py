
def step_415(cfg):
    v0_s415 = []
    for v1_s415 in range(len(v2_s415)):
        v3_s415 = v2_s415[v1_s415]
        if v4_s415(v3_s415):
            v0_s415.append(v3_s415)
    return cfg

def step_646(cfg):
    v0_s646 = []
    for v1_s646 in range(len(v2_s646)):
        v3_s646 = v2_s646[v1_s646]
        if v4_s646(v3_s646):
            v0_s646.append(v3_s646)
    return cfg

def step_877(cfg):
    v0_s877 = []
    for v1_s877 in range(len(v2_s877)):
        v3_s877 = v2_s877[v1_s877]
        if v4_s877(v3_s877):
            v0_s877.append(v3_s877)
    return cfg

def step_197(cfg):
    v0_s197 = []
    for v1_s197 in range(len(v2_s197)):
        if v3_s197(v2_s197[v1_s197]):
            v0_s197 += [v2_s197[v1_s197]]
    return cfg

def step_428(cfg):
    v0_s428 = []
    for v1_s428 in range(len(v2_s428)):
        if v3_s428(v2_s428[v1_s428]):
            v0_s428 += [v2_s428[v1_s428]]
    return cfg

def step_659(cfg):
    v0_s659 = []
    for v1_s659 in range(len(v2_s659)):
        if v3_s659(v2_s659[v1_s659]):
            v0_s659 += [v2_s659[v1_s659]]
    return cfg

def step_890(cfg):
    v0_s890 = []
    for v1_s890 in range(len(v2_s890)):
        if v3_s890(v2_s890[v1_s890]):
            v0_s890 += [v2_s890[v1_s890]]
    return cfg

def step_210(cfg):
    v0_s210 = []
    for v1_s210 in range(len(v2_s210)):
        if v3_s210(v2_s210[v1_s210]):
            v0_s210 = v0_s210 + [v2_s210[v1_s210]]
    return cfg

def step_441(cfg):
    v0_s441 = []
    for v1_s441 in range(len(v2_s441)):
        if v3_s441(v2_s441[v1_s441]):
            v0_s441 = v0_s441 + [v2_s441[v1_s441]]
    return cfg

def step_672(cfg):
    v0_s672 = []
    for v1_s672 in range(len(v2_s672)):
        if v3_s672(v2_s672[v1_s672]):
            v0_s672 = v0_s672 + [v2_s672[v1_s672]]
    return cfg

def step_903(cfg):
    v0_s903 = []
    for v1_s903 in range(len(v2_s903)):
        if v3_s903(v2_s903[v1_s903]):
            v0_s903 = v0_s903 + [v2_s903[v1_s903]]
    return cfg

def step_223(cfg):
    v0_s223 = []
    for v1_s223 in range(len(v2_s223)):
        v3_s223 = v2_s223[v1_s223]
        if v4_s223(v3_s223):
            v0_s223.append(v3_s223)
    return cfg
